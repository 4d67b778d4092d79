#pragma once

#include <string>
#include <utility>

#include "orefree/errors.hpp"
#include "orefree/poly.hpp"
#include "orefree/rational.hpp"

namespace orefree {

/// Reduced fraction of polynomials over a field K.  Canonical form: monic
/// denominator, gcd(num, den) = 1.  Canonical form is unique, so operator==
/// compares components directly.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(int v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    explicit RationalFunction(const K& v) : num_(v), den_(1) {}
    explicit RationalFunction(Polynomial<K> p) : num_(std::move(p)), den_(1) {}
    RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial<K>::variable()); }

    /// Caller guarantees den monic and gcd(num, den) = 1.
    static RationalFunction from_reduced(Polynomial<K> num, Polynomial<K> den) {
        RationalFunction r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // addition and multiplication keep operands reduced the whole way
    // (Henrici): the only gcds taken are against the shared denominator
    // part, which stays small for structured denominators
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Polynomial<K> d = gcd(a.den_, b.den_);
        if (d.degree() == 0) {
            Polynomial<K> num = a.num_ * b.den_ + b.num_ * a.den_;
            if (num.is_zero()) return RationalFunction();
            return from_reduced(std::move(num), a.den_ * b.den_);
        }
        Polynomial<K> q1 = Polynomial<K>::exact_divide(a.den_, d);
        Polynomial<K> q2 = Polynomial<K>::exact_divide(b.den_, d);
        Polynomial<K> t = a.num_ * q2 + b.num_ * q1;
        if (t.is_zero()) return RationalFunction();
        Polynomial<K> g = gcd(t, d);
        if (g.degree() == 0) return from_reduced(std::move(t), q1 * q2 * d);
        return from_reduced(Polynomial<K>::exact_divide(t, g),
                            q1 * q2 * Polynomial<K>::exact_divide(d, g));
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        Polynomial<K> g1 = gcd(a.num_, b.den_);
        Polynomial<K> g2 = gcd(b.num_, a.den_);
        Polynomial<K> n1 = g1.degree() == 0 ? a.num_ : Polynomial<K>::exact_divide(a.num_, g1);
        Polynomial<K> d2 = g1.degree() == 0 ? b.den_ : Polynomial<K>::exact_divide(b.den_, g1);
        Polynomial<K> n2 = g2.degree() == 0 ? b.num_ : Polynomial<K>::exact_divide(b.num_, g2);
        Polynomial<K> d1 = g2.degree() == 0 ? a.den_ : Polynomial<K>::exact_divide(a.den_, g2);
        return from_reduced(n1 * n2, d1 * d2);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        K lead_inv = K(1) / num_.leading();
        return from_reduced(den_ * lead_inv, num_ * lead_inv);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction acc(1), base(*this);
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1ul) acc *= base;
            base *= base;
            n >>= 1ul;
        }
        return acc;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Evaluate at a point of K; the canonical form is reduced first, so
    /// removable singularities are gone and a vanishing denominator is a
    /// genuine pole.
    K eval_or_throw(const K& x, const std::string& den_text) const {
        K d = den_.eval(x);
        if (d == K(0)) throw PoleError(den_text);
        return num_.eval(x) / d;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<K>(1);
            return;
        }
        auto g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial<K>::exact_divide(num_, g);
            den_ = Polynomial<K>::exact_divide(den_, g);
        }
        K inv = K(1) / den_.leading();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    Polynomial<K> num_;
    Polynomial<K> den_;
};

using RatFunc = RationalFunction<Rational>;

inline Rational evaluate_at(const RatFunc& f, const Rational& alpha) {
    return f.eval_or_throw(alpha, to_string(f.den()));
}

inline std::string to_string(const RatFunc& f, const std::string& var = "s") {
    std::string n = to_string(f.num(), var);
    if (f.is_polynomial()) return n;
    std::string d = to_string(f.den(), var);
    std::string left = needs_parens(n) ? "(" + n + ")" : n;
    std::string right = (needs_parens(d) || d.find('*') != std::string::npos) ? "(" + d + ")" : d;
    return left + "/" + right;
}

}  // namespace orefree
