#pragma once

#include <string>
#include <vector>

#include "orefree/matrix.hpp"
#include "orefree/poly.hpp"
#include "orefree/rational.hpp"

namespace orefree {

/// Hamilton quaternion over Q: a + bi + cj + dk.  The norm form
/// a^2+b^2+c^2+d^2 is anisotropic over Q, so this is a division ring.
struct Quaternion {
    Rational a{0}, b{0}, c{0}, d{0};

    Quaternion() = default;
    Quaternion(int v) : a(v) {}  // NOLINT: implicit by design
    explicit Quaternion(Rational re) : a(std::move(re)) {}
    Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Quaternion i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static Quaternion j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static Quaternion k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_central() const { return b == 0 && c == 0 && d == 0; }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    Quaternion operator-() const { return {-a, -b, -c, -d}; }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
    }
    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    friend bool operator==(const Quaternion& x, const Quaternion& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

    Quaternion conj() const { return {a, -b, -c, -d}; }
    Rational norm() const { return a * a + b * b + c * c + d * d; }
    Rational trace() const { return a + a; }

    Quaternion inverse() const {
        if (is_zero()) throw DivisionByZero("inversion of the zero quaternion");
        Rational n = norm();
        Quaternion cj = conj();
        return {cj.a / n, cj.b / n, cj.c / n, cj.d / n};
    }
    friend Quaternion operator/(const Quaternion& x, const Quaternion& y) { return x * y.inverse(); }
};

inline std::string to_string(const Quaternion& q) {
    std::string out;
    auto append = [&](const Rational& v, const char* unit) {
        if (v == 0) return;
        std::string vs = to_string(v < 0 ? -v : v);
        std::string term = (*unit && vs == "1") ? std::string(unit) : vs + unit;
        if (out.empty())
            out += (v < 0 ? "-" : "") + term;
        else
            out += (v < 0 ? " - " : " + ") + term;
    };
    append(q.a, "");
    append(q.b, "i");
    append(q.c, "j");
    append(q.d, "k");
    return out.empty() ? "0" : out;
}

/// Basis of the centralizer C(a; H) as a Q-space: the nullspace of
/// x -> ax - xa, row-reduced to a canonical basis.  Dimension 4 iff a is
/// central, 2 otherwise.
inline std::vector<Quaternion> centralizer_basis(const Quaternion& a) {
    const Quaternion units[4] = {Quaternion(1), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    Matrix<Rational> m(4, 4);
    for (int col = 0; col < 4; ++col) {
        Quaternion comm = a * units[col] - units[col] * a;
        m.at(0, static_cast<std::size_t>(col)) = comm.a;
        m.at(1, static_cast<std::size_t>(col)) = comm.b;
        m.at(2, static_cast<std::size_t>(col)) = comm.c;
        m.at(3, static_cast<std::size_t>(col)) = comm.d;
    }
    auto null = m.nullspace();
    // canonicalize: row-reduce the basis vectors
    Matrix<Rational> rows(null.size(), 4);
    for (std::size_t r = 0; r < null.size(); ++r)
        for (std::size_t c = 0; c < 4; ++c) rows.at(r, c) = null[r][c];
    rows.rref();
    std::vector<Quaternion> basis;
    for (std::size_t r = 0; r < null.size(); ++r)
        basis.push_back({rows.at(r, 0), rows.at(r, 1), rows.at(r, 2), rows.at(r, 3)});
    return basis;
}

/// Is q a Q-linear combination of the given quaternions?
inline bool in_span(const Quaternion& q, const std::vector<Quaternion>& basis) {
    Matrix<Rational> m(4, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        m.at(0, c) = basis[c].a;
        m.at(1, c) = basis[c].b;
        m.at(2, c) = basis[c].c;
        m.at(3, c) = basis[c].d;
    }
    return m.solve({q.a, q.b, q.c, q.d}).has_value();
}

using QuatPoly = Polynomial<Quaternion>;

inline QuatPoly promote(const Polynomial<Rational>& p) {
    std::vector<Quaternion> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.push_back(Quaternion(v));
    return QuatPoly(std::move(c));
}

inline QuatPoly conj(const QuatPoly& p) {
    std::vector<Quaternion> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.push_back(v.conj());
    return QuatPoly(std::move(c));
}

/// p * conj(p) has central (rational) coefficients.
inline Polynomial<Rational> central_norm(const QuatPoly& p) {
    QuatPoly prod = p * conj(p);
    std::vector<Rational> c;
    c.reserve(prod.coefficients().size());
    for (const auto& v : prod.coefficients()) {
        if (!v.is_central()) throw Error("internal: norm form of a quaternion polynomial must be central");
        c.push_back(v.a);
    }
    return Polynomial<Rational>(std::move(c));
}

/// Element of H(t), kept with a central denominator: numerator a quaternion
/// polynomial in the central t, denominator monic in Q[t] and coprime to
/// the numerator's rational content.  That representation is unique, so
/// equality is componentwise.
class QuatRat {
public:
    QuatRat() : num_(), den_(1) {}
    QuatRat(int v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    explicit QuatRat(const Quaternion& q) : num_(q), den_(1) {}
    explicit QuatRat(QuatPoly p) : num_(std::move(p)), den_(1) {}
    QuatRat(QuatPoly num, Polynomial<Rational> den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static QuatRat variable() { return QuatRat(QuatPoly::variable()); }

    const QuatPoly& num() const { return num_; }
    const Polynomial<Rational>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QuatRat operator+(const QuatRat& x, const QuatRat& y) {
        return QuatRat(x.num_ * promote(y.den_) + y.num_ * promote(x.den_), x.den_ * y.den_);
    }
    friend QuatRat operator-(const QuatRat& x, const QuatRat& y) { return x + (-y); }
    QuatRat operator-() const {
        QuatRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend QuatRat operator*(const QuatRat& x, const QuatRat& y) {
        return QuatRat(x.num_ * y.num_, x.den_ * y.den_);
    }
    QuatRat inverse() const {
        if (is_zero()) throw DivisionByZero();
        // (n/d)^{-1} = d * conj(n) / (n conj(n))
        return QuatRat(promote(den_) * conj(num_), central_norm(num_));
    }
    friend QuatRat operator/(const QuatRat& x, const QuatRat& y) { return x * y.inverse(); }
    QuatRat& operator+=(const QuatRat& o) { return *this = *this + o; }
    QuatRat& operator-=(const QuatRat& o) { return *this = *this - o; }
    QuatRat& operator*=(const QuatRat& o) { return *this = *this * o; }
    QuatRat& operator/=(const QuatRat& o) { return *this = *this / o; }

    friend bool operator==(const QuatRat& x, const QuatRat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const QuatRat& x, const QuatRat& y) { return !(x == y); }

private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("QuatRat with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<Rational>(1);
            return;
        }
        // rational content of the numerator components
        Polynomial<Rational> content;
        for (int comp = 0; comp < 4; ++comp) {
            std::vector<Rational> c;
            for (const auto& q : num_.coefficients())
                c.push_back(comp == 0 ? q.a : comp == 1 ? q.b : comp == 2 ? q.c : q.d);
            content = gcd(content, Polynomial<Rational>(std::move(c)));
            if (content.degree() == 0) break;
        }
        Polynomial<Rational> g = gcd(content, den_);
        if (g.degree() > 0) {
            den_ = Polynomial<Rational>::exact_divide(den_, g);
            QuatPoly gq = promote(g);
            // long division by the central factor is exact here
            QuatPoly rem = num_;
            QuatPoly quo;
            Quaternion lead_inv = gq.leading().inverse();
            while (!rem.is_zero() && rem.degree() >= gq.degree()) {
                std::size_t shift = static_cast<std::size_t>(rem.degree() - gq.degree());
                Quaternion factor = rem.leading() * lead_inv;
                quo += QuatPoly::monomial(factor, shift);
                rem -= QuatPoly::monomial(factor, shift) * gq;
            }
            if (!rem.is_zero()) throw Error("internal: content division must be exact");
            num_ = quo;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            den_ = den_ * (Rational(1) / lead);
            num_ = num_ * Quaternion(Rational(1) / lead);
        }
    }

    QuatPoly num_;
    Polynomial<Rational> den_;
};

enum class CentralizerMembership { IN_Zt, NOT_COMMUTING, COMMUTING_BUT_OUTSIDE };

/// Membership check against C(a; H(t)) = Z(t): w commutes with a iff every
/// numerator coefficient does (the denominator is central), and commuting
/// coefficients must lie in the span of centralizer_basis(a).  The third
/// arm is a test-failure flag, never a legitimate outcome.
inline CentralizerMembership verify_centralizer_in_Dt(const QuatRat& w, const Quaternion& a) {
    if (w.num() * QuatPoly(a) != QuatPoly(a) * w.num()) return CentralizerMembership::NOT_COMMUTING;
    auto basis = centralizer_basis(a);
    for (const auto& coeff : w.num().coefficients())
        if (!in_span(coeff, basis)) return CentralizerMembership::COMMUTING_BUT_OUTSIDE;
    return CentralizerMembership::IN_Zt;
}

struct DenominatorClearing {
    Polynomial<Rational> p;  // central polynomial with p(t) (1-at)^{-1} in H[t]
    QuatPoly cofactor;       // 1 - conj(a) t; p = (1-at)(1-conj(a)t)
};

/// The degree-2 central multiple from the minimal relation of a:
/// p(t) = 1 - tr(a) t + N(a) t^2 = (1 - a t)(1 - conj(a) t).
inline DenominatorClearing clear_left_denominator(const Quaternion& a) {
    DenominatorClearing out;
    out.p = Polynomial<Rational>(std::vector<Rational>{Rational(1), -a.trace(), a.norm()});
    out.cofactor = QuatPoly(std::vector<Quaternion>{Quaternion(1), -a.conj()});
    QuatPoly check = QuatPoly(std::vector<Quaternion>{Quaternion(1), -a}) * out.cofactor;
    if (check != promote(out.p)) throw Error("internal: denominator clearing identity failed");
    return out;
}

/// Truncated power series in t with quaternion coefficients.
struct QuatSeries {
    long lo = 0;
    long window = 0;
    std::vector<Quaternion> coeffs;  // for exponents lo..window

    Quaternion coeff(long n) const {
        if (n < lo || n > window) return Quaternion(0);
        return coeffs[static_cast<std::size_t>(n - lo)];
    }
};

/// Canonical embedding of H(t) fractions into quaternion Laurent series:
/// coefficients of w to order N.  A denominator vanishing at t = 0 shifts
/// the expansion into Laurent exponents when allow_laurent is set and is an
/// error otherwise.
inline QuatSeries embed_series(const QuatRat& w, long N, bool allow_laurent = true) {
    const Polynomial<Rational>& den = w.den();
    int k = den.is_zero() ? 0 : den.ldegree();
    if (k > 0 && !allow_laurent)
        throw Error("denominator vanishes at t = 0; Laurent expansion disabled");
    Polynomial<Rational> dh =
        k > 0 ? Polynomial<Rational>::exact_divide(den, Polynomial<Rational>::monomial(Rational(1),
                                                                                       static_cast<std::size_t>(k)))
              : den;
    // invert dh as a rational power series to order N + k
    long order = N + k;
    std::vector<Rational> inv(static_cast<std::size_t>(std::max(order, 0L)) + 1, Rational(0));
    Rational c0 = dh.coeff(0);
    inv[0] = Rational(1) / c0;
    for (long n = 1; n <= order; ++n) {
        Rational acc(0);
        for (long i = 1; i <= std::min<long>(n, dh.degree()); ++i)
            acc += dh.coeff(static_cast<std::size_t>(i)) * inv[static_cast<std::size_t>(n - i)];
        inv[static_cast<std::size_t>(n)] = -acc / c0;
    }
    QuatSeries out;
    out.lo = -k;
    out.window = N;
    out.coeffs.assign(static_cast<std::size_t>(N + k) + 1, Quaternion(0));
    for (long e = -k; e <= N; ++e) {
        Quaternion acc(0);
        for (long i = 0; i <= std::min<long>(e + k, w.num().degree()); ++i)
            acc += w.num().coeff(static_cast<std::size_t>(i)) *
                   Quaternion(inv[static_cast<std::size_t>(e + k - i)]);
        out.coeffs[static_cast<std::size_t>(e + k)] = acc;
    }
    return out;
}

inline std::string to_string(const QuatSeries& s) {
    std::string out;
    for (long n = s.lo; n <= s.window; ++n) {
        Quaternion c = s.coeff(n);
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        bool neg = cs[0] == '-' && !needs_parens(cs);
        std::string mag = neg ? cs.substr(1) : cs;
        if (needs_parens(mag)) mag = "(" + mag + ")";
        std::string term;
        if (n == 0)
            term = mag;
        else {
            std::string ts = n == 1 ? "t" : "t^" + std::to_string(n);
            term = mag == "1" ? ts : mag + "*" + ts;
        }
        out += out.empty() ? (neg ? "-" + term : term) : (neg ? " - " : " + ") + term;
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(s.window + 1) + ")";
}

}  // namespace orefree
