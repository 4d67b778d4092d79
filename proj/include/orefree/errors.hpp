#pragma once

#include <stdexcept>
#include <string>

namespace orefree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Evaluation hit a zero of the denominator.  Carries the vanishing
/// denominator so callers can report the bad point.
struct PoleError : Error {
    std::string denominator;
    explicit PoleError(std::string den)
        : Error("evaluation at a pole of denominator " + den), denominator(std::move(den)) {}
};

struct UnsupportedFactorization : Error {
    explicit UnsupportedFactorization(const std::string& what) : Error(what) {}
};

struct NotAUnit : Error {
    NotAUnit() : Error("series has zero lowest-order coefficient and is not invertible") {}
};

struct PrecisionError : Error {
    long required_order;
    explicit PrecisionError(long required)
        : Error("insufficient series precision; order " + std::to_string(required) + " required"),
          required_order(required) {}
};

struct SigmaMismatch : Error {
    SigmaMismatch() : Error("operands carry different automorphisms") {}
};

struct UnsupportedInstance : Error {
    explicit UnsupportedInstance(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

}  // namespace orefree
