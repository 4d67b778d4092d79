#pragma once

#include <set>

#include "orefree/factor.hpp"
#include "orefree/matrix.hpp"
#include "orefree/sigma.hpp"

namespace orefree {

template <class K>
K power_of(const K& base, int e) {
    K acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

/// Resultant via the Sylvester determinant; exact over any field K.
template <class K>
K sylvester_resultant(const Polynomial<K>& p, const Polynomial<K>& q) {
    if (p.is_zero() || q.is_zero()) return K(0);
    int m = p.degree(), n = q.degree();
    if (m == 0) return power_of(p.leading(), n);
    if (n == 0) return power_of(q.leading(), m);
    Matrix<K> syl(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            syl.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + k)) =
                p.coeff(static_cast<std::size_t>(m - k));
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            syl.at(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + k)) =
                q.coeff(static_cast<std::size_t>(n - k));
    return syl.det();
}

/// R(u) = Res_s(p(s), r(s+u)) as a polynomial in u, by evaluation and
/// Lagrange interpolation.
inline PolyQ resultant_of_shifted(const PolyQ& p, const PolyQ& r) {
    int bound = p.degree() * r.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= bound; ++i) {
        Rational u(i);
        PolyQ shifted = r.compose(PolyQ(std::vector<Rational>{u, Rational(1)}));
        xs.push_back(u);
        ys.push_back(sylvester_resultant(p, shifted));
    }
    return interpolate(xs, ys);
}

/// R(w) = Res_s(p(s), r(w*s)) as a polynomial in w.
inline PolyQ resultant_of_dilated(const PolyQ& p, const PolyQ& r) {
    int bound = p.degree() * r.degree();
    std::vector<Rational> xs, ys;
    for (int i = 1; i <= bound + 1; ++i) {
        Rational w(i);
        xs.push_back(w);
        ys.push_back(sylvester_resultant(p, r.scale_variable(w)));
    }
    return interpolate(xs, ys);
}

/// Integers j with gcd(p(s), sigma^j(r)(s)) nonconstant.  For a dilation
/// with s dividing both inputs every j qualifies; that case is reported via
/// all_integers alongside the finite offsets contributed by nonzero roots.
struct DispersionSet {
    bool all_integers = false;
    std::set<long> offsets;
};

inline bool shares_factor(const PolyQ& p, const PolyQ& r, const SigmaSpec& sigma, long j) {
    return gcd(p, sigma_apply(r, sigma, j)).degree() > 0;
}

inline DispersionSet dispersion(const PolyQ& p, const PolyQ& r, const SigmaSpec& sigma) {
    if (p.is_zero() || r.is_zero()) throw Error("dispersion requires nonzero inputs");
    DispersionSet out;
    if (sigma.is_shift()) {
        if (p.degree() == 0 || r.degree() == 0) return out;
        PolyQ res = resultant_of_shifted(p, r);
        if (res.is_zero()) throw Error("dispersion: resultant vanished identically");
        for (const auto& u0 : rational_roots(res)) {
            Rational j = u0 / sigma.param();
            if (!is_integer(j)) continue;
            long jl = static_cast<long>(numerator(j));
            if (shares_factor(p, r, sigma, jl)) out.offsets.insert(jl);
        }
        return out;
    }
    int vp = p.ldegree(), vr = r.ldegree();
    out.all_integers = vp > 0 && vr > 0;
    PolyQ ph = vp > 0 ? PolyQ::exact_divide(p, PolyQ::monomial(Rational(1), static_cast<std::size_t>(vp))) : p;
    PolyQ rh = vr > 0 ? PolyQ::exact_divide(r, PolyQ::monomial(Rational(1), static_cast<std::size_t>(vr))) : r;
    if (ph.degree() == 0 || rh.degree() == 0) return out;
    PolyQ res = resultant_of_dilated(ph, rh);
    if (res.is_zero()) throw Error("dispersion: resultant vanished identically");
    const Rational& q = sigma.param();
    for (const auto& w0 : rational_roots(res)) {
        if (w0 == 0) continue;
        constexpr long kSearchBound = 200;
        for (long j = -kSearchBound; j <= kSearchBound; ++j) {
            if (pow_rational(q, j) != w0) continue;
            if (shares_factor(p, r, sigma, j)) out.offsets.insert(j);
            break;
        }
    }
    return out;
}

/// Direct gcd scan; the test oracle for dispersion.
inline std::set<long> dispersion_bruteforce(const PolyQ& p, const PolyQ& r, const SigmaSpec& sigma,
                                            long lo, long hi) {
    std::set<long> out;
    for (long j = lo; j <= hi; ++j)
        if (shares_factor(p, r, sigma, j)) out.insert(j);
    return out;
}

}  // namespace orefree
