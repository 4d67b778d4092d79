#pragma once

#include <json.hpp>

#include "orefree/freeness.hpp"
#include "orefree/quaternion.hpp"
#include "orefree/sigma_equation.hpp"
#include "orefree/specialization.hpp"
#include "orefree/words_language.hpp"

namespace orefree {

using json = nlohmann::json;

/// Series as (exponent, numerator, denominator) triples.
inline json series_json(const Series& s) {
    json arr = json::array();
    for (long n = std::min(s.lowest(), s.window() + 1); n <= s.window(); ++n) {
        RatFunc c = s.coeff(n);
        if (c.is_zero()) continue;
        arr.push_back({n, to_string(c.num()), to_string(c.den())});
    }
    return arr;
}

inline json certificate_json(const FreenessCertificate& cert) {
    json j;
    j["instance"] = cert.instance;
    j["sigma"] = cert.sigma.str();
    j["generators"] = {{"g1", cert.g1_text}, {"g2", cert.g2_text}};
    j["L"] = cert.L;
    j["N"] = cert.N;
    json words = json::array();
    for (const auto& w : cert.words) words.push_back(w.str());
    j["words"] = words;
    j["verdict"] = verdict_name(cert.verdict);
    if (cert.verdict == FreenessCertificate::Verdict::DEPENDENT) {
        json rel = json::array();
        for (const auto& q : cert.relation) rel.push_back(to_string(q));
        j["relation"] = rel;
    }
    if (cert.verdict == FreenessCertificate::Verdict::INDEPENDENT) {
        json piv = json::array();
        for (const auto& p : cert.pivots)
            piv.push_back({p.word_index, p.exponent, p.coeff_index});
        j["pivots"] = piv;
    }
    json trace = json::array();
    for (const auto& step : cert.trace) trace.push_back({{"N", step.N}, {"outcome", step.outcome}});
    j["trace"] = trace;
    j["timings"] = {{"expand_ms", cert.expand_ms}, {"rank_ms", cert.rank_ms}};
    return j;
}

inline json obstruction_json(const OrbitObstruction& o) {
    return {{"orbit_representative", to_string(o.orbit_representative)},
            {"pole_order", o.exponent},
            {"residue", to_string(o.residue)}};
}

inline json difference_verdict_json(const DifferenceVerdict& v) {
    json j;
    j["status"] = v.solvable ? "SOLVABLE" : "UNSOLVABLE";
    if (v.solvable) j["u"] = to_string(v.u);
    if (v.obstruction) j["obstruction"] = obstruction_json(*v.obstruction);
    if (v.constant_obstruction)
        j["obstruction"] = {{"kind", "polynomial-part"},
                            {"constant_term", to_string(*v.constant_obstruction)}};
    return j;
}

inline json hypothesis_json(const HypothesisResult& h) {
    json j;
    j["status"] = h.holds ? "HYPOTHESIS_HOLDS" : "FAILS";
    if (!h.holds) {
        j["u"] = to_string(h.u);
        j["e"] = to_string(h.e);
    }
    if (h.obstruction) j["obstruction"] = obstruction_json(*h.obstruction);
    return j;
}

inline json specialization_json(const SpecializationReport& rep) {
    json j;
    j["elements"] = rep.elements;
    j["verdict"] = rep.independent ? "INDEPENDENT_OVER_Q(t)" : "DEPENDENT_OVER_Q(t)";
    json matrix = json::array();
    for (const auto& row : rep.matrix) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_string(e, "t"));
        matrix.push_back(r);
    }
    j["matrix"] = matrix;
    j["s_denominator"] = to_string(rep.s_denominator, "s");
    if (rep.independent) {
        j["witness_columns"] = rep.witness_columns;
        j["witness_minor"] = to_string(rep.witness_minor, "t");
        json bad = json::array();
        for (const auto& b : rep.bad_points) bad.push_back(to_string(b));
        j["bad_points"] = bad;
    } else {
        json rel = json::array();
        for (const auto& e : rep.relation) rel.push_back(to_string(e, "t"));
        j["relation"] = rel;
    }
    return j;
}

inline json growth_json(const GrowthProfile& p) {
    json f = json::array(), g = json::array(), cum = json::array();
    for (const auto& v : p.f) f.push_back(v.str());
    for (const auto& v : p.g) g.push_back(v.str());
    for (const auto& v : p.cumulative) cum.push_back(v.str());
    return {{"horizon", p.horizon}, {"f", f}, {"g", g}, {"cumulative", cum}};
}

inline json periodic_json(const PeriodicWordResult& r) {
    json j;
    switch (r.status) {
        case PeriodicWordResult::Status::FOUND: j["status"] = "FOUND"; break;
        case PeriodicWordResult::Status::FINITE: j["status"] = "NOT_FOUND(finite)"; break;
        default: j["status"] = "NOT_FOUND(growth)"; break;
    }
    if (r.status == PeriodicWordResult::Status::FOUND) {
        j["u"] = r.u;
        j["stabilization_index"] = r.stabilization_index;
        j["cycle_states"] = r.cycle_states;
        j["verified_powers"] = r.verified_powers;
    } else {
        j["profile"] = growth_json(r.profile);
    }
    return j;
}

inline json dichotomy_json(const DichotomyResult& r) {
    json j;
    switch (r.kind) {
        case DichotomyResult::Kind::PERIODIC:
            j["kind"] = "PERIODIC";
            j["witness_d"] = r.witness_d;
            j["periodic"] = periodic_json(r.periodic);
            break;
        case DichotomyResult::Kind::BINOMIAL_GROWTH:
            j["kind"] = "BINOMIAL_GROWTH";
            j["profile"] = growth_json(r.profile);
            break;
        default:
            j["kind"] = "UNDETERMINED";
            j["note"] = r.note;
            j["profile"] = growth_json(r.profile);
            break;
    }
    return j;
}

inline json quat_series_json(const QuatSeries& s) {
    json arr = json::array();
    for (long n = s.lo; n <= s.window; ++n) {
        Quaternion c = s.coeff(n);
        if (c.is_zero()) continue;
        arr.push_back({n, to_string(c)});
    }
    return {{"coefficients", arr}, {"window", s.window}};
}

/// Remove run-to-run volatile fields before byte comparisons.
inline json strip_volatile(json j) {
    if (j.is_object()) {
        j.erase("timings");
        for (auto& [key, value] : j.items()) value = strip_volatile(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_volatile(value);
    }
    return j;
}

}  // namespace orefree
