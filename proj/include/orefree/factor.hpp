#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "orefree/poly.hpp"
#include "orefree/rational.hpp"

namespace orefree {

using PolyQ = Polynomial<Rational>;

/// Yun squarefree decomposition (characteristic 0): returns monic pairwise
/// coprime squarefree factors with their multiplicities, ascending.
inline std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() <= 0) return out;
    PolyQ f = p.monic();
    PolyQ a = gcd(f, f.derivative());
    PolyQ b = PolyQ::exact_divide(f, a);
    PolyQ c = PolyQ::exact_divide(f.derivative(), a);
    PolyQ d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        PolyQ ai = gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = PolyQ::exact_divide(b, ai);
        c = PolyQ::exact_divide(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

/// All rational roots of p (each listed once), by the rational root theorem
/// on the primitive integer form.
inline std::vector<Rational> rational_roots(const PolyQ& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;
    auto ints = primitive_integer_coeffs(p);
    std::size_t v = 0;
    while (v < ints.size() && ints[v] == 0) ++v;
    if (v > 0) roots.push_back(Rational(0));
    if (v + 1 >= ints.size()) return roots;
    Int a0 = ints[v], lead = ints.back();
    std::set<Rational> found;
    for (const Int& a : positive_divisors(a0)) {
        for (const Int& b : positive_divisors(lead)) {
            for (int sign : {1, -1}) {
                Rational cand = make_rational(sign > 0 ? a : -a, b);
                if (found.count(cand)) continue;
                if (p.eval(cand) == 0) {
                    found.insert(cand);
                    roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Split a monic, squarefree, rational-rootless quartic into two monic
/// quadratics if possible (classic integer divisor search on the monic
/// integer model q(y) = lambda^4 p(y/lambda)).
inline bool quartic_split(const PolyQ& p, PolyQ& f1, PolyQ& f2) {
    Int lambda = 1;
    for (const auto& c : p.coefficients()) lambda = boost::multiprecision::lcm(lambda, denominator(c));
    Rational lam(lambda);
    auto scaled = [&](int i) {
        return numerator(p.coeff(static_cast<std::size_t>(i)) * pow_rational(lam, 4 - i));
    };
    Int q0 = scaled(0), q1 = scaled(1), q2 = scaled(2), q3 = scaled(3);
    for (const Int& d1 : positive_divisors(q0)) {
        for (int sign : {1, -1}) {
            Int b = sign > 0 ? d1 : -d1;
            if (q0 % b != 0) continue;
            Int d = q0 / b;
            Int S = q3, P = q2 - b - d;
            Int disc = S * S - 4 * P, u;
            if (!is_perfect_square(disc, u)) continue;
            for (int branch : {1, -1}) {
                Int twice_a = S + (branch > 0 ? u : -u);
                if (twice_a % 2 != 0) continue;
                Int a = twice_a / 2, c = S - a;
                if (a * d + b * c != q1) continue;
                Rational lam2 = lam * lam;
                f1 = PolyQ(std::vector<Rational>{make_rational(b, 1) / lam2, make_rational(a, 1) / lam,
                                                 Rational(1)});
                f2 = PolyQ(std::vector<Rational>{make_rational(d, 1) / lam2, make_rational(c, 1) / lam,
                                                 Rational(1)});
                return true;
            }
        }
    }
    return false;
}

struct Factorization {
    Rational lead;
    std::vector<std::pair<PolyQ, int>> factors;  // monic irreducible, multiplicity
};

/// Irreducible factorization over Q.  Squarefree split and rational-root
/// peeling work in any degree; the remaining rootless squarefree core is
/// factored fully only up to degree 4, past which the input is out of the
/// kernel's declared scope and UnsupportedFactorization is thrown.
inline Factorization factorize(const PolyQ& p) {
    if (p.is_zero()) throw Error("factorize: zero polynomial");
    Factorization out;
    out.lead = p.leading();
    auto add = [&](const PolyQ& f, int mult) { out.factors.emplace_back(f, mult); };
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        PolyQ rest = sf;
        for (const auto& r : rational_roots(sf)) {
            PolyQ lin(std::vector<Rational>{-r, Rational(1)});
            rest = PolyQ::exact_divide(rest, lin);
            add(lin, mult);
        }
        if (rest.degree() == 0) continue;
        if (rest.degree() <= 3) {
            add(rest, mult);  // rootless quadratic or cubic is irreducible over Q
            continue;
        }
        if (rest.degree() == 4) {
            PolyQ f1, f2;
            if (quartic_split(rest, f1, f2)) {
                add(f1, mult);
                add(f2, mult);
            } else {
                add(rest, mult);
            }
            continue;
        }
        throw UnsupportedFactorization("irreducible factorization beyond degree 4 core (degree " +
                                       std::to_string(rest.degree()) + ") is not supported");
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int d = a.first.degree(); d >= 0; --d) {
            const Rational ca = a.first.coeff(static_cast<std::size_t>(d));
            const Rational cb = b.first.coeff(static_cast<std::size_t>(d));
            if (ca != cb) return ca < cb;
        }
        return a.second < b.second;
    });
    return out;
}

}  // namespace orefree
