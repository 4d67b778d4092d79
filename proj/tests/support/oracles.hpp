// Test-only oracles and random generators.  Everything here decides by a
// different route than the library code it checks: the sigma-equation
// oracle is a bounded linear ansatz, the independence oracle flattens over
// one global denominator, and the Q(t)-dependence oracle clears the
// bivariate fractions directly.
#pragma once

#include <random>
#include <vector>

#include "orefree/orefree.hpp"

namespace oracles {

using namespace orefree;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -9, int hi = 9, int den_hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int lo = -9, int hi = 9, int den_hi = 4) {
    Rational q = random_rational(rng, lo, hi, den_hi);
    while (q == 0) q = random_rational(rng, lo, hi, den_hi);
    return q;
}

inline PolyQ random_poly(Rng& rng, int max_degree, int coeff_hi = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, -coeff_hi, coeff_hi, 3));
    PolyQ p{std::move(c)};
    return p.is_zero() ? PolyQ(1) : p;
}

/// Random reduced rational function with a denominator that is a product
/// of small linear factors (poles at small integers), the shape the solver
/// and certifier meet.
inline RatFunc random_ratfunc_linear_poles(Rng& rng, int num_degree = 3, int max_factors = 2,
                                           int pole_window = 2) {
    std::uniform_int_distribution<int> nfac(0, max_factors);
    std::uniform_int_distribution<int> pole(-pole_window, pole_window);
    std::uniform_int_distribution<int> mult(1, 2);
    PolyQ den(1);
    int k = nfac(rng);
    for (int i = 0; i < k; ++i) {
        PolyQ lin(std::vector<Rational>{Rational(pole(rng)), Rational(1)});
        for (int m = mult(rng); m > 0; --m) den = den * lin;
    }
    PolyQ num = random_poly(rng, num_degree);
    return RatFunc(num, den);
}

inline RatFunc random_ratfunc(Rng& rng, int num_degree = 3, int den_degree = 3) {
    PolyQ den = random_poly(rng, den_degree);
    while (den.is_zero()) den = random_poly(rng, den_degree);
    return RatFunc(random_poly(rng, num_degree), den);
}

// ---------------------------------------------------------------------------
// sigma-equation oracle: solve sigma(u) - u = f by brute linear algebra over
// the fixed ansatz  u = sum_{d<=poly_degree} a_d s^d
//                     + sum_{|j|<=pole_window} sum_{m<=max_order} b_{j,m}/(s+j)^m.
// ---------------------------------------------------------------------------
struct AnsatzVerdict {
    bool solvable = false;
    RatFunc u;
};

inline AnsatzVerdict bounded_ansatz_solve(const RatFunc& f, const SigmaSpec& sigma, int pole_window,
                                          int max_order, int poly_degree) {
    std::vector<RatFunc> basis;
    PolyQ svar = PolyQ::variable();
    for (int d = 1; d <= poly_degree; ++d) basis.push_back(RatFunc(svar.pow(static_cast<unsigned>(d))));
    for (int j = -pole_window; j <= pole_window; ++j) {
        PolyQ lin(std::vector<Rational>{Rational(j), Rational(1)});
        for (int m = 1; m <= max_order; ++m)
            basis.push_back(RatFunc(PolyQ(1), lin.pow(static_cast<unsigned>(m))));
    }
    // columns: sigma(phi) - phi, flattened over the common denominator
    std::vector<RatFunc> cols;
    cols.reserve(basis.size());
    PolyQ common = f.den();
    for (const auto& phi : basis) {
        RatFunc psi = sigma_apply(phi, sigma, 1) - phi;
        common = lcm(common, psi.den());
        cols.push_back(psi);
    }
    int width = 0;
    std::vector<PolyQ> nums;
    for (const auto& psi : cols) {
        PolyQ n = psi.num() * PolyQ::exact_divide(common, psi.den());
        width = std::max(width, n.degree() + 1);
        nums.push_back(n);
    }
    PolyQ target = f.num() * PolyQ::exact_divide(common, f.den());
    width = std::max(width, target.degree() + 1);
    Matrix<Rational> m(static_cast<std::size_t>(width), nums.size());
    std::vector<Rational> rhs(static_cast<std::size_t>(width), Rational(0));
    for (std::size_t c = 0; c < nums.size(); ++c)
        for (int r = 0; r < width; ++r) m.at(static_cast<std::size_t>(r), c) = nums[c].coeff(static_cast<std::size_t>(r));
    for (int r = 0; r < width; ++r) rhs[static_cast<std::size_t>(r)] = target.coeff(static_cast<std::size_t>(r));
    auto sol = m.solve(rhs);
    AnsatzVerdict out;
    if (!sol) return out;
    out.solvable = true;
    RatFunc u(0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((*sol)[i] != 0) u += RatFunc((*sol)[i]) * basis[i];
    out.u = u;
    if (sigma_apply(u, sigma, 1) - u != f) throw Error("oracle: ansatz solution failed verification");
    return out;
}

// ---------------------------------------------------------------------------
// independence oracle: flatten every coefficient over one global common
// denominator (a different valid flattening) and row-reduce.
// ---------------------------------------------------------------------------
struct NaiveIndependence {
    bool independent = false;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_words;
};

inline NaiveIndependence naive_independence(const std::vector<Series>& series, long N) {
    PolyQ common(1);
    long lo = N;
    for (const auto& s : series) {
        lo = std::min(lo, s.lowest());
        for (long n = s.lowest(); n <= N; ++n) common = lcm(common, s.coeff(n).den());
    }
    int width = 0;
    std::vector<std::vector<PolyQ>> nums(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (long n = lo; n <= N; ++n) {
            RatFunc c = series[i].coeff(n);
            PolyQ p = c.num() * PolyQ::exact_divide(common, c.den());
            width = std::max(width, p.degree() + 1);
            nums[i].push_back(p);
        }
    }
    std::size_t blocks = static_cast<std::size_t>(N - lo + 1);
    Matrix<Rational> m(blocks * static_cast<std::size_t>(width), series.size());
    for (std::size_t i = 0; i < series.size(); ++i)
        for (std::size_t b = 0; b < blocks; ++b)
            for (int k = 0; k < width; ++k)
                m.at(b * static_cast<std::size_t>(width) + static_cast<std::size_t>(k), i) =
                    nums[i][b].coeff(static_cast<std::size_t>(k));
    auto copy = m;
    auto pivots = copy.rref();
    NaiveIndependence out;
    out.rank = pivots.size();
    out.independent = out.rank == series.size();
    for (auto& [r, c] : pivots) out.pivot_words.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// Q(t)-dependence oracle: clear the family to Q[s][t] directly and
// row-reduce the s-coefficient matrix over the field Q(t).
// ---------------------------------------------------------------------------
inline bool naive_dependent_over_qt(const std::vector<PolyT>& f, const std::vector<PolyT>& g) {
    PolyT h(std::vector<RatFunc>{RatFunc(1)});
    for (const auto& gi : g) h = lcm(h, gi);
    PolyQ sden(1);
    std::vector<PolyT> d;
    for (std::size_t i = 0; i < f.size(); ++i) {
        d.push_back(f[i] * PolyT::exact_divide(h, g[i]));
        for (const auto& c : d.back().coefficients()) sden = lcm(sden, c.den());
    }
    int sdeg = 0;
    for (const auto& di : d)
        for (const auto& c : di.coefficients())
            sdeg = std::max(sdeg, (c.num() * PolyQ::exact_divide(sden, c.den())).degree());
    Matrix<RatFuncT> m(f.size(), static_cast<std::size_t>(sdeg) + 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& coeffs = d[i].coefficients();
        for (std::size_t td = 0; td < coeffs.size(); ++td) {
            PolyQ num = coeffs[td].num() * PolyQ::exact_divide(sden, coeffs[td].den());
            for (int k = 0; k <= num.degree(); ++k) {
                RatFuncT term{PolyQ::monomial(num.coeff(static_cast<std::size_t>(k)), td)};
                m.at(i, static_cast<std::size_t>(k)) = m.at(i, static_cast<std::size_t>(k)) + term;
            }
        }
    }
    return m.rank() < f.size();
}

}  // namespace oracles
