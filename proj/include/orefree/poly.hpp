#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "orefree/errors.hpp"
#include "orefree/rational.hpp"

namespace orefree {

/// Dense univariate polynomial with coefficients in K, ascending degree
/// order, trailing zeros trimmed.  K only needs ring operations; the
/// division-based members additionally require K to be a (commutative)
/// field.  Multiplication preserves operand order, so K may be
/// non-commutative (quaternion coefficients with a central variable).
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int v) {  // NOLINT: implicit by design, constants are pervasive
        if (v != 0) c_.push_back(K(v));
    }
    explicit Polynomial(const K& v) {
        if (!(v == K(0))) c_.push_back(v);
    }
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<K>{K(0), K(1)}); }

    static Polynomial monomial(const K& coeff, std::size_t deg) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = coeff;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 marks the zero polynomial

    /// Lowest index with nonzero coefficient; -1 for the zero polynomial.
    int ldegree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == K(0))) return static_cast<int>(i);
        return -1;
    }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& leading() const { return c_.back(); }
    const std::vector<K>& coefficients() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<K> r(c_);
        for (auto& v : r) v = K(0) - v;
        Polynomial out;
        out.c_ = std::move(r);
        return out;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& s, const Polynomial& p) { return Polynomial(s) * p; }
    friend Polynomial operator*(const Polynomial& p, const K& s) { return p * Polynomial(s); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned long e) const {
        Polynomial acc(1), base(*this);
        while (e) {
            if (e & 1ul) acc = acc * base;
            base = base * base;
            e >>= 1ul;
        }
        return acc;
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Substitution p(q); K commutative.
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial(*it);
        return acc;
    }

    /// p(lambda * var): coefficient i picks up lambda^i.
    Polynomial scale_variable(const K& lambda) const {
        std::vector<K> r(c_);
        K f(1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = r[i] * f;
            f = f * lambda;
        }
        return Polynomial(std::move(r));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> r(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Polynomial(std::move(r));
    }

    /// Quotient and remainder; requires a field K and b != 0.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Polynomial rem = a, quo;
        K lead_inv = K(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            K factor = rem.leading() * lead_inv;
            quo += Polynomial::monomial(factor, shift);
            rem -= Polynomial::monomial(factor, shift) * b;
        }
        return {quo, rem};
    }

    Polynomial operator/(const Polynomial& b) const { return divmod(*this, b).first; }
    Polynomial operator%(const Polynomial& b) const { return divmod(*this, b).second; }

    /// Exact quotient; throws if b does not divide a.
    static Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error("exact_divide: remainder is nonzero");
        return q;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading();
        std::vector<K> r(c_);
        for (auto& v : r) v = v * inv;
        return Polynomial(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd via Euclid; field K.
template <class K>
Polynomial<K> gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> x = a, y = b;
    while (!y.is_zero()) {
        auto r = Polynomial<K>::divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

/// Primitive integer form: p scaled so all coefficients are integers with
/// content 1; returns the integer coefficient list (ascending).
inline std::vector<Int> primitive_integer_coeffs(const Polynomial<Rational>& p) {
    Int den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    std::vector<Int> ints;
    ints.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) ints.push_back(numerator(c) * (den_lcm / denominator(c)));
    Int content = 0;
    for (const auto& v : ints) content = boost::multiprecision::gcd(content, v);
    if (content > 1)
        for (auto& v : ints) v /= content;
    return ints;
}

namespace detail {

inline void trim_int_poly(std::vector<Int>& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

inline void make_primitive(std::vector<Int>& u) {
    Int content = 0;
    for (const auto& v : u) content = boost::multiprecision::gcd(content, v);
    if (content > 1)
        for (auto& v : u) v /= content;
}

/// Pseudo-remainder lc(v)^{deg u - deg v + 1} * u mod v over Z.
inline std::vector<Int> pseudo_remainder(std::vector<Int> u, const std::vector<Int>& v) {
    const Int lv = v.back();
    while (u.size() >= v.size()) {
        Int top = u.back();
        std::size_t shift = u.size() - v.size();
        for (auto& c : u) c *= lv;
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= top * v[i];
        trim_int_poly(u);
        if (u.empty()) break;
    }
    return u;
}

}  // namespace detail

/// Monic gcd over Q[x] through the primitive polynomial remainder sequence
/// over Z, which keeps intermediate coefficients near the resultant bound
/// instead of the exponential blowup of fraction-arithmetic Euclid.
inline Polynomial<Rational> gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> u = primitive_integer_coeffs(a);
    std::vector<Int> v = primitive_integer_coeffs(b);
    if (u.size() < v.size()) u.swap(v);
    while (!v.empty()) {
        auto r = detail::pseudo_remainder(u, v);
        detail::make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    Rational lead(u.back());
    for (const auto& c : u) out.push_back(Rational(c) / lead);
    return Polynomial<Rational>(std::move(out));
}

template <class K>
Polynomial<K> lcm(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<K>();
    return Polynomial<K>::exact_divide(a * b, gcd(a, b)).monic();
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g, g monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(const Polynomial<K>& a,
                                                                     const Polynomial<K>& b) {
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial<K>::divmod(r0, r1);
        r0 = r1;
        r1 = r;
        auto s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        auto t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = K(1) / r0.leading();
    return {r0.monic(), s0 * inv, t0 * inv};
}

/// Lagrange interpolation through (xs[i], ys[i]); field K, xs distinct.
template <class K>
Polynomial<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
    Polynomial<K> result;
    const auto n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial<K> basis(1);
        K denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis *= Polynomial<K>(std::vector<K>{K(0) - xs[j], K(1)});
            denom = denom * (xs[i] - xs[j]);
        }
        result += basis * (ys[i] / denom);
    }
    return result;
}

inline bool needs_parens(const std::string& s) {
    if (s.find_first_of("+-") == std::string::npos) return false;
    // a single leading minus on an otherwise atomic token is fine
    if (s.size() > 1 && s[0] == '-' && s.find_first_of("+-", 1) == std::string::npos) return false;
    return true;
}

template <class K, class CoeffPrinter>
std::string poly_to_string(const Polynomial<K>& p, const std::string& var, CoeffPrinter print) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        K c = p.coeff(static_cast<std::size_t>(d));
        if (c == K(0)) continue;
        std::string cs = print(c);
        bool neg = !cs.empty() && cs[0] == '-' && !needs_parens(cs);
        std::string mag = neg ? cs.substr(1) : cs;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string term;
        if (d == 0) {
            term = needs_parens(mag) ? "(" + mag + ")" : mag;
        } else {
            std::string xs = d == 1 ? var : var + "^" + std::to_string(d);
            if (mag == "1")
                term = xs;
            else
                term = (needs_parens(mag) ? "(" + mag + ")" : mag) + "*" + xs;
        }
        out += term;
    }
    return out;
}

inline std::string to_string(const Polynomial<Rational>& p, const std::string& var = "s") {
    return poly_to_string(p, var, [](const Rational& q) { return to_string(q); });
}

}  // namespace orefree
