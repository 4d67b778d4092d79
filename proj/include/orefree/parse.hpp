#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <string>

#include "orefree/quaternion.hpp"
#include "orefree/skew.hpp"
#include "orefree/specialization.hpp"

namespace orefree {

namespace detail {

template <class F>
struct ExprPolicy {
    static F one(const F&) { return F(1); }
    static F divide(const F& a, const F& b) { return a / b; }
    static bool allow_negative_power() { return true; }
};

template <>
struct ExprPolicy<SkewPoly> {
    static SkewPoly one(const SkewPoly& sample) { return SkewPoly(sample.sigma(), RatFunc(1)); }
    static SkewPoly divide(const SkewPoly& a, const SkewPoly& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (b.degree() > 0)
            throw Error("skew expressions only divide by coefficients; write the fraction as num/den parts");
        return a * SkewPoly(b.sigma(), b.coeff(0).inverse());
    }
    static bool allow_negative_power() { return false; }
};

/// Recursive-descent parser over a division ring F.  Grammar: +, -, *, /,
/// unary minus, ^ with integer exponents, parentheses, integer literals
/// and named atoms.  Multiplication is evaluated left to right, so F may
/// be non-commutative; a/b means a * b^{-1}.
template <class F>
class ExprParser {
public:
    ExprParser(std::map<std::string, F> atoms, std::function<F(const Rational&)> constant)
        : atoms_(std::move(atoms)), constant_(std::move(constant)) {}

    F parse(const std::string& text) {
        src_ = &text;
        pos_ = 0;
        F v = expr();
        skip_ws();
        if (pos_ != text.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip_ws() {
        while (pos_ < src_->size() && (src_->at(pos_) == ' ' || src_->at(pos_) == '\t')) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_->size() ? src_->at(pos_) : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    F expr() {
        F v = term();
        for (;;) {
            if (consume('+'))
                v = v + term();
            else if (consume('-'))
                v = v - term();
            else
                return v;
        }
    }

    F term() {
        F v = unary();
        for (;;) {
            if (consume('*')) {
                v = v * unary();
            } else if (consume('/')) {
                v = ExprPolicy<F>::divide(v, unary());
            } else {
                // juxtaposition against a symbol or parenthesis multiplies:
                // "2i", "3(1-x)", "s t"
                char c = peek();
                if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                    v = v * power();
                else
                    return v;
            }
        }
    }

    F unary() {
        if (consume('-')) return constant_(Rational(-1)) * unary();
        return power();
    }

    F power() {
        F base = atom();
        if (!consume('^')) return base;
        bool negative = consume('-');
        if (negative && !ExprPolicy<F>::allow_negative_power())
            fail("negative exponents are not allowed here");
        std::string digits = read_digits();
        if (digits.empty()) fail("expected an integer exponent after '^'");
        long e = std::stol(digits);
        F acc = ExprPolicy<F>::one(base);
        F b = negative ? ExprPolicy<F>::divide(acc, base) : base;
        for (long k = 0; k < e; ++k) acc = acc * b;
        return acc;
    }

    F atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            F v = expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            return constant_(Rational(Int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_identifier();
            auto it = atoms_.find(name);
            if (it == atoms_.end()) fail("unknown symbol '" + name + "'");
            return it->second;
        }
        if (c == '.') fail("decimal literals are not supported; write an exact fraction like 3/2");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos_ < src_->size() && std::isdigit(static_cast<unsigned char>(src_->at(pos_)))) {
            out += src_->at(pos_);
            ++pos_;
        }
        return out;
    }
    std::string read_identifier() {
        skip_ws();
        std::string out;
        while (pos_ < src_->size() &&
               (std::isalnum(static_cast<unsigned char>(src_->at(pos_))) || src_->at(pos_) == '_')) {
            out += src_->at(pos_);
            ++pos_;
        }
        return out;
    }

    std::map<std::string, F> atoms_;
    std::function<F(const Rational&)> constant_;
    const std::string* src_ = nullptr;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Rational function of one variable, default "s": standard infix with
/// integer and fraction literals, e.g. "1/s", "(s^2-s)/2".
inline RatFunc parse_ratfunc(const std::string& text, const std::string& var = "s") {
    detail::ExprParser<RatFunc> p({{var, RatFunc::variable()}},
                                  [](const Rational& q) { return RatFunc(q); });
    return p.parse(text);
}

/// Skew polynomial in x over Q(s) with the twist carried by sigma.
inline SkewPoly parse_skew(const std::string& text, const SigmaSpec& sigma) {
    SkewPoly x = SkewPoly::variable(sigma);
    SkewPoly s(sigma, RatFunc::variable());
    detail::ExprParser<SkewPoly> p({{"x", x}, {"s", s}},
                                   [&](const Rational& q) { return SkewPoly(sigma, RatFunc(q)); });
    return p.parse(text);
}

inline Quaternion parse_quaternion(const std::string& text) {
    detail::ExprParser<Quaternion> p(
        {{"i", Quaternion::i()}, {"j", Quaternion::j()}, {"k", Quaternion::k()}},
        [](const Rational& q) { return Quaternion(q); });
    return p.parse(text);
}

/// Element of H(t): quaternion units plus the central t.
inline QuatRat parse_quatrat(const std::string& text) {
    detail::ExprParser<QuatRat> p({{"i", QuatRat(Quaternion::i())},
                                   {"j", QuatRat(Quaternion::j())},
                                   {"k", QuatRat(Quaternion::k())},
                                   {"t", QuatRat::variable()}},
                                  [](const Rational& q) { return QuatRat(Quaternion(q)); });
    return p.parse(text);
}

/// Element of Q(s)(t): rational function in t whose coefficients live in
/// Q(s).
inline RationalFunction<RatFunc> parse_st_element(const std::string& text) {
    using Elem = RationalFunction<RatFunc>;
    Elem s{Polynomial<RatFunc>(RatFunc::variable())};
    detail::ExprParser<Elem> p({{"s", s}, {"t", Elem::variable()}},
                               [](const Rational& q) { return Elem(RatFunc(q)); });
    return p.parse(text);
}

}  // namespace orefree
