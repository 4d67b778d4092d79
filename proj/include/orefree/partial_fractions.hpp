#pragma once

#include <vector>

#include "orefree/factor.hpp"
#include "orefree/ratfunc.hpp"

namespace orefree {

/// f = poly_part + sum_i numerator_i / factor_i^multiplicity_i, the factors
/// being the distinct monic irreducible divisors of the denominator and
/// deg(numerator_i) < deg(factor_i^multiplicity_i).
struct PartialFractions {
    PolyQ poly_part;
    struct Term {
        PolyQ factor;
        int multiplicity;
        PolyQ numerator;
    };
    std::vector<Term> terms;
};

inline PartialFractions partial_fractions(const RatFunc& f) {
    PartialFractions out;
    auto [quo, rem] = PolyQ::divmod(f.num(), f.den());
    out.poly_part = quo;
    if (rem.is_zero()) return out;
    // denominator is monic by the canonical form, so the factor powers
    // multiply back to it exactly
    auto fac = factorize(f.den());
    for (const auto& [v, m] : fac.factors) {
        PolyQ vm = v.pow(static_cast<unsigned long>(m));
        PolyQ other = PolyQ::exact_divide(f.den(), vm);
        auto [g, inv_other, unused] = extended_gcd(other, vm);
        if (g.degree() != 0) throw Error("partial_fractions: factors are not coprime");
        PolyQ num = PolyQ::divmod(rem * inv_other, vm).second;
        out.terms.push_back({v, m, num});
    }
    return out;
}

inline RatFunc recombine(const PartialFractions& pf) {
    RatFunc acc{pf.poly_part};
    for (const auto& t : pf.terms)
        acc += RatFunc(t.numerator, t.factor.pow(static_cast<unsigned long>(t.multiplicity)));
    return acc;
}

}  // namespace orefree
