#pragma once

#include <map>
#include <string>
#include <vector>

#include "orefree/errors.hpp"
#include "orefree/ratfunc.hpp"
#include "orefree/sigma.hpp"

namespace orefree {

/// Skew polynomial over coefficient ring C with twist x*a = sigma(a)*x.
/// The twist lives in the multiplication rule a x^n * b x^m = a sigma^n(b)
/// x^{n+m}; nothing twisted is ever stored.
template <class C = RatFunc>
class SkewPolynomial {
public:
    explicit SkewPolynomial(SigmaSpec sigma) : sigma_(std::move(sigma)) {}
    SkewPolynomial(SigmaSpec sigma, const C& constant) : sigma_(std::move(sigma)) {
        if (!(constant == C(0))) coeffs_[0] = constant;
    }

    static SkewPolynomial variable(const SigmaSpec& sigma) {
        SkewPolynomial p(sigma);
        p.coeffs_[1] = C(1);
        return p;
    }

    const SigmaSpec& sigma() const { return sigma_; }
    const std::map<long, C>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    long ldegree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }
    C coeff(long n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? C(0) : it->second;
    }

    void set_coeff(long n, const C& v) {
        if (n < 0) throw Error("skew polynomial exponents must be nonnegative");
        if (v == C(0))
            coeffs_.erase(n);
        else
            coeffs_[n] = v;
    }

    friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
        a.check_sigma(b);
        SkewPolynomial r = a;
        for (const auto& [n, c] : b.coeffs_) r.set_coeff(n, r.coeff(n) + c);
        return r;
    }
    friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) {
        a.check_sigma(b);
        SkewPolynomial r = a;
        for (const auto& [n, c] : b.coeffs_) r.set_coeff(n, r.coeff(n) - c);
        return r;
    }
    SkewPolynomial operator-() const {
        SkewPolynomial r(sigma_);
        for (const auto& [n, c] : coeffs_) r.coeffs_[n] = C(0) - c;
        return r;
    }
    friend SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) {
        a.check_sigma(b);
        SkewPolynomial r(a.sigma_);
        for (const auto& [n, ca] : a.coeffs_)
            for (const auto& [m, cb] : b.coeffs_) {
                C term = ca * sigma_apply(cb, a.sigma_, n);
                r.set_coeff(n + m, r.coeff(n + m) + term);
            }
        return r;
    }

    SkewPolynomial pow(unsigned long e) const {
        SkewPolynomial acc(sigma_, C(1)), base(*this);
        while (e) {
            if (e & 1ul) acc = acc * base;
            base = base * base;
            e >>= 1ul;
        }
        return acc;
    }

    friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
        return a.sigma_ == b.sigma_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SkewPolynomial& a, const SkewPolynomial& b) { return !(a == b); }

private:
    void check_sigma(const SkewPolynomial& other) const {
        if (!(sigma_ == other.sigma_)) throw SigmaMismatch();
    }

    SigmaSpec sigma_;
    std::map<long, C> coeffs_;
};

using SkewPoly = SkewPolynomial<RatFunc>;

/// Truncated skew Laurent series: coefficients are stored for exponents in
/// [lo, window]; exponents below lo are exactly zero and nothing is claimed
/// past the window.  Multiplication reports validity to
/// min(N1 + m2, N2 + m1), the tight bound for truncated factors.
template <class C = RatFunc>
class SkewSeries {
public:
    SkewSeries(SigmaSpec sigma, long lo, long window, std::vector<C> coeffs)
        : sigma_(std::move(sigma)), lo_(lo), hi_(window), cs_(std::move(coeffs)) {
        if (hi_ < lo_ - 1) throw Error("series window ends before its lowest exponent");
        if (cs_.size() != static_cast<std::size_t>(hi_ - lo_ + 1))
            throw Error("series coefficient count does not match its window");
        trim();
    }

    static SkewSeries zero_to(const SigmaSpec& sigma, long window) {
        return SkewSeries(sigma, window + 1, window, {});
    }
    static SkewSeries one(const SigmaSpec& sigma, long window) {
        return from_constant(sigma, C(1), window);
    }
    static SkewSeries from_constant(const SigmaSpec& sigma, const C& c, long window) {
        if (window < 0) throw Error("window must be >= 0 for a constant series");
        std::vector<C> v(static_cast<std::size_t>(window) + 1, C(0));
        v[0] = c;
        return SkewSeries(sigma, 0, window, std::move(v));
    }
    /// A skew polynomial is exact, so any window is valid for it.
    static SkewSeries from_poly(const SkewPolynomial<C>& p, long window) {
        if (p.is_zero()) return zero_to(p.sigma(), window);
        long lo = p.ldegree();
        if (lo > window) return zero_to(p.sigma(), window);
        std::vector<C> v(static_cast<std::size_t>(window - lo + 1), C(0));
        for (const auto& [n, c] : p.coefficients())
            if (n <= window) v[static_cast<std::size_t>(n - lo)] = c;
        return SkewSeries(p.sigma(), lo, window, std::move(v));
    }

    const SigmaSpec& sigma() const { return sigma_; }
    long lowest() const { return lo_; }
    long window() const { return hi_; }
    bool is_zero_to_window() const { return cs_.empty(); }

    C coeff(long n) const {
        if (n > hi_) throw Error("coefficient " + std::to_string(n) + " is beyond the valid window " +
                                 std::to_string(hi_));
        if (n < lo_) return C(0);
        return cs_[static_cast<std::size_t>(n - lo_)];
    }

    SkewSeries truncated(long new_window) const {
        if (new_window > hi_) throw Error("cannot extend a truncated series");
        if (new_window < lo_) return zero_to(sigma_, new_window);
        std::vector<C> v(cs_.begin(), cs_.begin() + static_cast<std::ptrdiff_t>(new_window - lo_ + 1));
        return SkewSeries(sigma_, lo_, new_window, std::move(v));
    }

    friend SkewSeries operator+(const SkewSeries& a, const SkewSeries& b) {
        a.check_sigma(b);
        long hi = std::min(a.hi_, b.hi_);
        long lo = std::min(a.lo_, b.lo_);
        if (lo > hi) return zero_to(a.sigma_, hi);
        std::vector<C> v;
        v.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (long n = lo; n <= hi; ++n) v.push_back(a.coeff(n) + b.coeff(n));
        return SkewSeries(a.sigma_, lo, hi, std::move(v));
    }
    friend SkewSeries operator-(const SkewSeries& a, const SkewSeries& b) { return a + (-b); }
    SkewSeries operator-() const {
        SkewSeries r = *this;
        for (auto& c : r.cs_) c = C(0) - c;
        return r;
    }

    friend SkewSeries operator*(const SkewSeries& a, const SkewSeries& b) {
        a.check_sigma(b);
        long lo = a.lo_ + b.lo_;
        long hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        if (a.is_zero_to_window() || b.is_zero_to_window() || lo > hi) {
            return zero_to(a.sigma_, hi);
        }
        // right factors with one repeated coefficient (the (1-x)^{-1} tail
        // shape) admit the prefix-sum recurrence c_k = c_{k-1} + a_k s^k(g),
        // one addition per output coefficient instead of a convolution
        if (b.lo_ == 0) {
            bool constant_tail = true;
            for (const auto& c : b.cs_)
                if (!(c == b.cs_.front())) {
                    constant_tail = false;
                    break;
                }
            if (constant_tail) {
                const C& g = b.cs_.front();
                std::vector<C> v;
                v.reserve(static_cast<std::size_t>(hi - lo + 1));
                C acc(0);
                for (long k = lo; k <= hi; ++k) {
                    const C& ak = a.cs_[static_cast<std::size_t>(k - a.lo_)];
                    if (!(ak == C(0))) acc += ak * sigma_apply(g, a.sigma_, k);
                    v.push_back(acc);
                }
                return SkewSeries(a.sigma_, lo, hi, std::move(v));
            }
        }
        std::vector<C> v(static_cast<std::size_t>(hi - lo + 1), C(0));
        for (long i = a.lo_; i <= a.hi_; ++i) {
            C ai = a.cs_[static_cast<std::size_t>(i - a.lo_)];
            if (ai == C(0)) continue;
            long jmax = std::min(b.hi_, hi - i);
            for (long j = b.lo_; j <= jmax; ++j) {
                const C& bj = b.cs_[static_cast<std::size_t>(j - b.lo_)];
                if (bj == C(0)) continue;
                v[static_cast<std::size_t>(i + j - lo)] += ai * sigma_apply(bj, a.sigma_, i);
            }
        }
        return SkewSeries(a.sigma_, lo, hi, std::move(v));
    }

    friend bool operator==(const SkewSeries& a, const SkewSeries& b) {
        return a.sigma_ == b.sigma_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.cs_ == b.cs_;
    }

    /// Two-sided inverse by the twisted geometric recursion.  A series of
    /// valuation m valid to N yields an inverse valid to N - 2m.
    SkewSeries inverted() const {
        if (is_zero_to_window()) throw NotAUnit();
        long m = lo_;
        const C& unit = cs_.front();
        C unit_inv = C(1) / unit;
        long out_hi = hi_ - 2 * m;
        std::vector<C> g(static_cast<std::size_t>(out_hi - (-m) + 1), C(0));
        g[0] = sigma_apply(unit_inv, sigma_, -m);
        for (long k = 1; k <= hi_ - m; ++k) {
            // the x^k coefficient of f*g: only the i = m term is unknown,
            // and no coefficient of f beyond the window enters while
            // k <= hi - m
            C acc(0);
            long imax = std::min(hi_, k + m);
            for (long i = m + 1; i <= imax; ++i) {
                long j = k - i;  // j in [-m, k-m-1], already computed
                const C& gj = g[static_cast<std::size_t>(j + m)];
                if (gj == C(0)) continue;
                acc += cs_[static_cast<std::size_t>(i - m)] * sigma_apply(gj, sigma_, i);
            }
            g[static_cast<std::size_t>(k)] = sigma_apply((C(0) - acc) * unit_inv, sigma_, -m);
        }
        return SkewSeries(sigma_, -m, out_hi, std::move(g));
    }

    /// sigma acts coefficientwise on the series model.
    SkewSeries sigma_shifted(long j) const {
        SkewSeries r = *this;
        for (auto& c : r.cs_) c = sigma_apply(c, sigma_, j);
        r.trim();
        return r;
    }

private:
    void check_sigma(const SkewSeries& other) const {
        if (!(sigma_ == other.sigma_)) throw SigmaMismatch();
    }
    void trim() {
        while (!cs_.empty() && cs_.front() == C(0)) {
            cs_.erase(cs_.begin());
            ++lo_;
        }
    }

    SigmaSpec sigma_;
    long lo_;
    long hi_;
    std::vector<C> cs_;
};

using Series = SkewSeries<RatFunc>;

inline Series series_invert(const Series& f) { return f.inverted(); }

/// Series of p * r^{-1}, valid to order N.
template <class C>
SkewSeries<C> expand_right_fraction(const SkewPolynomial<C>& p, const SkewPolynomial<C>& r, long N) {
    if (r.is_zero()) throw DivisionByZero("right fraction with zero denominator");
    if (p.is_zero()) return SkewSeries<C>::zero_to(p.sigma(), N);
    long mp = p.ldegree(), mr = r.ldegree();
    long inv_window = std::max(N - mp, -mr);  // inverse precision the product needs
    long r_window = inv_window + 2 * mr;      // inversion costs 2*valuation
    auto rs = SkewSeries<C>::from_poly(r, r_window);
    auto inv = rs.inverted();
    auto ps = SkewSeries<C>::from_poly(p, N + mr);
    auto prod = ps * inv;
    if (prod.window() < N) throw PrecisionError(N + (N - prod.window()));
    return prod.truncated(N);
}

inline std::string to_string(const SkewPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [n, c] : p.coefficients()) {
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-' && !needs_parens(cs);
        std::string mag = neg ? cs.substr(1) : cs;
        if (needs_parens(mag) || (n != 0 && mag.find('/') != std::string::npos)) mag = "(" + mag + ")";
        std::string term;
        if (n == 0)
            term = mag;
        else {
            std::string xs = var + (n == 1 ? "" : "^" + std::to_string(n));
            term = mag == "1" ? xs : mag + "*" + xs;
        }
        if (out.empty())
            out += (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

inline std::string coeff_text(const RatFunc& c) { return to_string(c); }
inline std::string coeff_text(const Polynomial<RatFunc>& c) {
    return poly_to_string(c, "t", [](const RatFunc& q) { return to_string(q); });
}

/// Prints "c0 + c1*x + ... + O(x^{N+1})".
template <class C>
std::string to_string(const SkewSeries<C>& f, const std::string& var = "x") {
    std::string out;
    for (long n = std::min(f.lowest(), f.window() + 1); n <= f.window(); ++n) {
        C c = f.coeff(n);
        if (c == C(0)) continue;
        std::string cs = coeff_text(c);
        bool neg = !cs.empty() && cs[0] == '-' && !needs_parens(cs);
        std::string mag = neg ? cs.substr(1) : cs;
        if (needs_parens(mag) || (n != 0 && mag.find('/') != std::string::npos)) mag = "(" + mag + ")";
        std::string term;
        if (n == 0)
            term = mag;
        else {
            std::string xs = var + (n == 1 ? "" : "^" + std::to_string(n));
            term = mag == "1" ? xs : mag + "*" + xs;
        }
        if (out.empty())
            out += (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    if (out.empty()) out = "0";
    out += " + O(" + var + "^" + std::to_string(f.window() + 1) + ")";
    return out;
}

}  // namespace orefree
