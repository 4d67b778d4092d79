#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdlib>
#include <string>
#include <vector>

#include "orefree/errors.hpp"

namespace orefree {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    return Rational(num) / Rational(den);  // division canonicalizes
}

/// Parse "p", "-p" or "p/q".  The two-argument mpq constructor is a trap and
/// string construction skips canonicalization, so route through division.
inline Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    return make_rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

inline std::string to_string(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    unsigned long n;
    if (e < 0) {
        if (b == 0) throw DivisionByZero();
        b = Rational(1) / b;
        n = static_cast<unsigned long>(-e);
    } else {
        n = static_cast<unsigned long>(e);
    }
    Rational acc(1);
    while (n) {
        if (n & 1u) acc *= b;
        b *= b;
        n >>= 1u;
    }
    return acc;
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

/// Rational q is a square iff numerator and denominator both are.
inline bool rational_square_root(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Int rn, rd;
    if (!is_perfect_square(numerator(q), rn) || !is_perfect_square(denominator(q), rd)) return false;
    root = make_rational(rn, rd);
    return true;
}

/// Positive divisors by trial division.  Fine for the coefficient sizes this
/// library meets; callers keep inputs modest.
inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace orefree
