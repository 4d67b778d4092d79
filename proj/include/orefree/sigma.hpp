#pragma once

#include <string>

#include "orefree/errors.hpp"
#include "orefree/poly.hpp"
#include "orefree/ratfunc.hpp"

namespace orefree {

/// A k-automorphism of Q(s): the shift s -> s + c (c != 0) or the dilation
/// s -> q*s (q not 0 or a root of unity, i.e. q not in {1,-1}).  Both have
/// fixed field exactly the constants Q.
class SigmaSpec {
public:
    enum class Kind { shift, dilation };

    static SigmaSpec shift(const Rational& c) {
        if (c == 0) throw Error("shift constant must be nonzero");
        return SigmaSpec(Kind::shift, c);
    }
    static SigmaSpec dilation(const Rational& q) {
        if (q == 0) throw Error("dilation ratio must be nonzero");
        if (q == 1 || q == -1) throw Error("dilation ratio must not be a root of unity (q != 1, -1)");
        return SigmaSpec(Kind::dilation, q);
    }

    Kind kind() const { return kind_; }
    const Rational& param() const { return param_; }
    bool is_shift() const { return kind_ == Kind::shift; }

    SigmaSpec inverse() const {
        return kind_ == Kind::shift ? shift(-param_) : dilation(Rational(1) / param_);
    }

    std::string fixed_field_note() const { return "Q (constants)"; }

    friend bool operator==(const SigmaSpec& a, const SigmaSpec& b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }
    friend bool operator!=(const SigmaSpec& a, const SigmaSpec& b) { return !(a == b); }

    std::string str() const {
        return (kind_ == Kind::shift ? "shift:" : "dilation:") + to_string(param_);
    }

    /// Accepts "shift:c" or "dilation:q" with rational c, q.
    static SigmaSpec parse(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos) throw Error("sigma descriptor must look like shift:1 or dilation:2");
        std::string kind = text.substr(0, colon);
        Rational p = rational_from_string(text.substr(colon + 1));
        if (kind == "shift") return shift(p);
        if (kind == "dilation") return dilation(p);
        throw Error("unknown sigma kind '" + kind + "'");
    }

private:
    SigmaSpec(Kind k, Rational p) : kind_(k), param_(std::move(p)) {}
    Kind kind_;
    Rational param_;
};

inline Polynomial<Rational> sigma_apply(const Polynomial<Rational>& p, const SigmaSpec& sigma, long j) {
    if (j == 0 || p.is_zero()) return p;
    if (sigma.is_shift()) {
        // substitute s -> s + j*c
        Polynomial<Rational> target(std::vector<Rational>{Rational(j) * sigma.param(), Rational(1)});
        return p.compose(target);
    }
    return p.scale_variable(pow_rational(sigma.param(), j));
}

/// An automorphism maps a reduced fraction to a reduced fraction, so only
/// the monic normalization of the denominator is redone.
inline RatFunc sigma_apply(const RatFunc& f, const SigmaSpec& sigma, long j) {
    if (j == 0 || f.is_zero()) return f;
    Polynomial<Rational> num = sigma_apply(f.num(), sigma, j);
    Polynomial<Rational> den = sigma_apply(f.den(), sigma, j);
    if (den.leading() != 1) {
        Rational inv = Rational(1) / den.leading();
        num = num * inv;
        den = den * inv;
    }
    return RatFunc::from_reduced(std::move(num), std::move(den));
}

/// sigma extends to the central t-layer coefficientwise (sigma(t) = t).
inline Polynomial<RatFunc> sigma_apply(const Polynomial<RatFunc>& p, const SigmaSpec& sigma, long j) {
    if (j == 0) return p;
    std::vector<RatFunc> c(p.coefficients());
    for (auto& v : c) v = sigma_apply(v, sigma, j);
    return Polynomial<RatFunc>(std::move(c));
}

}  // namespace orefree
