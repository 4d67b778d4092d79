#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "orefree/factor.hpp"
#include "orefree/matrix.hpp"
#include "orefree/ratfunc.hpp"

namespace orefree {

/// Element of the t-extension layer: a polynomial in central t with
/// coefficients in Q(s).
using PolyT = Polynomial<RatFunc>;
/// Q(t): rational functions in t over Q.
using RatFuncT = RationalFunction<Rational>;

/// Dependence report for a family f_i(t) g_i(t)^{-1}: the coefficient
/// matrix a_ij(t) w.r.t. a Q-basis of the coefficient space, the verdict
/// over Q(t), and (when independent) the finite set of bad specialization
/// points, each a root of the witness minor or of a denominator.
/// Irrational bad points stay implicit in the witness minor, which the
/// report carries verbatim.
struct SpecializationReport {
    std::vector<std::string> elements;
    std::size_t n = 0;                       // number of elements
    std::size_t m = 0;                       // basis size
    std::vector<std::vector<PolyQ>> matrix;  // a_ij(t), n rows, m cols
    PolyQ s_denominator;                     // Q(s); basis vectors are s^k / Q(s)
    bool independent = false;
    std::vector<std::size_t> witness_columns;
    PolyQ witness_minor;                  // in t; nonzero iff independent
    std::vector<PolyQ> relation;          // over Q[t], cleared and primitive, when dependent
    std::vector<PolyQ> denominator_gcds;  // per element: t-poly whose rational roots kill g_i
    std::vector<Rational> bad_points;     // sorted
};

namespace detail {

/// Advance a k-combination of {0..m-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] != i + m - k) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline PolyQ det_over_qt(const std::vector<std::vector<PolyQ>>& a, const std::vector<std::size_t>& cols) {
    const std::size_t n = a.size();
    Matrix<RatFuncT> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = RatFuncT(a[i][cols[j]]);
    RatFuncT d = m.det();
    if (d.den().degree() != 0) throw Error("determinant of a polynomial matrix must be a polynomial");
    return d.num() * (Rational(1) / d.den().leading());
}

/// t-polynomial whose rational roots are exactly the alpha with
/// g(alpha) = 0 in Q(s): the gcd of the s-degree slices of the cleared
/// numerators.
inline PolyQ denominator_root_poly(const PolyT& g) {
    PolyQ common(1);
    for (const auto& c : g.coefficients()) common = lcm(common, c.den());
    std::vector<PolyQ> cleared;
    for (const auto& c : g.coefficients()) cleared.push_back(c.num() * PolyQ::exact_divide(common, c.den()));
    int sdeg = -1;
    for (const auto& p : cleared) sdeg = std::max(sdeg, p.degree());
    PolyQ acc;
    for (int r = 0; r <= sdeg; ++r) {
        std::vector<Rational> slice;
        for (const auto& p : cleared) slice.push_back(p.coeff(static_cast<std::size_t>(r)));
        acc = gcd(acc, PolyQ(std::move(slice)));
        if (acc.degree() == 0) break;
    }
    return acc;
}

}  // namespace detail

/// Decide dependence of {f_i g_i^{-1}} over Q(t) via the vanishing of all
/// n x n minors of the coefficient matrix, and enumerate the bad
/// specialization points when independent.
inline std::string polyt_to_string(const PolyT& p) {
    return poly_to_string(p, "t", [](const RatFunc& c) { return to_string(c); });
}

inline SpecializationReport dependence_over_kt(const std::vector<PolyT>& f, const std::vector<PolyT>& g) {
    if (f.size() != g.size() || f.empty()) throw Error("dependence_over_kt: mismatched family");
    SpecializationReport rep;
    rep.n = f.size();
    for (const auto& gi : g)
        if (gi.is_zero()) throw DivisionByZero("zero denominator in family");
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::string text = polyt_to_string(f[i]);
        if (!(g[i] == PolyT(1))) text = "(" + text + ")/(" + polyt_to_string(g[i]) + ")";
        rep.elements.push_back(std::move(text));
    }

    // clear denominators through a common right multiple: f_i g_i^{-1} = d_i h^{-1}
    PolyT h(std::vector<RatFunc>{RatFunc(1)});
    for (const auto& gi : g) h = lcm(h, gi);
    std::vector<PolyT> d;
    d.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) d.push_back(f[i] * PolyT::exact_divide(h, g[i]));

    // basis of the coefficient space: s^k / Q(s) for the common denominator Q
    PolyQ Q(1);
    for (const auto& di : d)
        for (const auto& c : di.coefficients()) Q = lcm(Q, c.den());
    rep.s_denominator = Q;
    int sdeg = -1;
    std::vector<std::vector<PolyQ>> cleared(d.size());  // [i][t-degree] -> numerator in s
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (const auto& c : d[i].coefficients()) {
            PolyQ num = c.num() * PolyQ::exact_divide(Q, c.den());
            sdeg = std::max(sdeg, num.degree());
            cleared[i].push_back(std::move(num));
        }
    }
    if (sdeg < 0) sdeg = 0;  // all-zero family
    rep.m = static_cast<std::size_t>(sdeg + 1);
    rep.matrix.assign(rep.n, std::vector<PolyQ>(rep.m, PolyQ()));
    for (std::size_t i = 0; i < rep.n; ++i)
        for (std::size_t k = 0; k < rep.m; ++k) {
            std::vector<Rational> tc;
            for (const auto& num : cleared[i]) tc.push_back(num.coeff(k));
            rep.matrix[i][k] = PolyQ(std::move(tc));
        }

    // independent over Q(t) iff some n x n minor is not identically zero
    rep.independent = false;
    if (rep.m >= rep.n) {
        std::vector<std::size_t> cols(rep.n);
        for (std::size_t i = 0; i < rep.n; ++i) cols[i] = i;
        do {
            PolyQ minor = detail::det_over_qt(rep.matrix, cols);
            if (!minor.is_zero()) {
                rep.independent = true;
                rep.witness_columns = cols;
                rep.witness_minor = minor.monic();
                break;
            }
        } while (detail::next_combination(cols, rep.m));
    }

    if (!rep.independent) {
        Matrix<RatFuncT> at(rep.m, rep.n);
        for (std::size_t i = 0; i < rep.n; ++i)
            for (std::size_t k = 0; k < rep.m; ++k) at.at(k, i) = RatFuncT(rep.matrix[i][k]);
        auto basis = at.nullspace();
        if (basis.empty()) throw Error("dependent family without a nullspace vector");
        // clear to Q[t], primitive, positive leading coefficient first
        std::vector<RatFuncT>& v = basis.front();
        PolyQ den_lcm(1);
        for (const auto& e : v) den_lcm = lcm(den_lcm, e.den());
        std::vector<PolyQ> rel;
        for (const auto& e : v) rel.push_back(e.num() * PolyQ::exact_divide(den_lcm, e.den()));
        PolyQ content;
        for (const auto& e : rel) content = gcd(content, e);
        if (content.degree() > 0)
            for (auto& e : rel) e = PolyQ::exact_divide(e, content);
        Int ilcm = 1, igcd = 0;
        for (const auto& e : rel)
            for (const auto& c : e.coefficients()) ilcm = boost::multiprecision::lcm(ilcm, denominator(c));
        for (auto& e : rel) e = e * Rational(ilcm);
        for (const auto& e : rel)
            for (const auto& c : e.coefficients()) igcd = boost::multiprecision::gcd(igcd, numerator(c));
        if (igcd > 1)
            for (auto& e : rel) e = e * make_rational(1, igcd);
        for (const auto& e : rel) {
            if (e.is_zero()) continue;
            if (e.leading() < 0)
                for (auto& x : rel) x = -x;
            break;
        }
        rep.relation = std::move(rel);
        return rep;
    }

    // bad points: rational roots of the witness minor and of the denominators
    std::set<Rational> bad;
    for (const auto& r : rational_roots(rep.witness_minor)) bad.insert(r);
    for (const auto& gi : g) {
        PolyQ rootpoly = detail::denominator_root_poly(gi);
        rep.denominator_gcds.push_back(rootpoly);
        if (rootpoly.degree() > 0)
            for (const auto& r : rational_roots(rootpoly)) bad.insert(r);
    }
    rep.bad_points.assign(bad.begin(), bad.end());
    return rep;
}

/// Rank over Q of the family specialized at t = alpha.
inline std::size_t specialized_rank(const SpecializationReport& rep, const Rational& alpha) {
    Matrix<Rational> m(rep.n, rep.m);
    for (std::size_t i = 0; i < rep.n; ++i)
        for (std::size_t k = 0; k < rep.m; ++k) m.at(i, k) = rep.matrix[i][k].eval(alpha);
    return m.rank();
}

}  // namespace orefree
