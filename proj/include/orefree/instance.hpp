#pragma once

#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <string>

#include "orefree/json_io.hpp"
#include "orefree/parse.hpp"
#include "orefree/toml.hpp"

namespace orefree {

/// Declarative description of a certification problem.  Generators default
/// to the two-generator shape g1 = (1-x)^{-1}, g2 = b(1-x)^{-1}.
struct InstanceSpec {
    std::string name;
    SigmaSpec sigma = SigmaSpec::shift(Rational(1));
    std::string b_text = "1/s";
    std::string g1_num = "1", g1_den = "1-x";
    std::string g2_num, g2_den = "1-x";  // empty g2_num means "use b"
    int L = 3;
    long N0 = 0;  // 0 = default 4L
    int max_doublings = 2;
    std::uint64_t seed = 0;
    bool certify_on_fail = false;

    RatFunc b() const { return parse_ratfunc(b_text); }
    GeneratorFraction g1() const {
        return {parse_skew(g1_num, sigma), parse_skew(g1_den, sigma)};
    }
    GeneratorFraction g2() const {
        return {parse_skew(g2_num.empty() ? b_text : g2_num, sigma), parse_skew(g2_den, sigma)};
    }

    std::string to_toml() const {
        std::ostringstream out;
        out << "name = \"" << name << "\"\n";
        out << "sigma = \"" << sigma.str() << "\"\n";
        out << "b = \"" << b_text << "\"\n";
        out << "L = " << L << "\n";
        out << "seed = " << seed << "\n";
        if (certify_on_fail) out << "certify_on_fail = true\n";
        out << "\n[policy]\n";
        out << "N0 = " << N0 << "\n";
        out << "max_doublings = " << max_doublings << "\n";
        out << "\n[generators]\n";
        out << "g1_num = \"" << g1_num << "\"\n";
        out << "g1_den = \"" << g1_den << "\"\n";
        out << "g2_num = \"" << (g2_num.empty() ? b_text : g2_num) << "\"\n";
        out << "g2_den = \"" << g2_den << "\"\n";
        return out.str();
    }
};

inline InstanceSpec instance_from_toml(const TomlTable& table) {
    static const std::set<std::string> known = {
        "name",          "sigma",           "b",
        "L",             "seed",            "certify_on_fail",
        "policy.N0",     "policy.max_doublings", "generators.g1_num",
        "generators.g1_den", "generators.g2_num", "generators.g2_den"};
    for (const auto& [key, value] : table)
        if (!known.count(key)) throw Error("unknown key '" + key + "' in instance file");

    auto get_str = [&](const std::string& key, const std::string& fallback) {
        auto it = table.find(key);
        if (it == table.end()) return fallback;
        if (it->second.kind != TomlValue::Kind::String) throw Error("key '" + key + "' must be a string");
        return it->second.str;
    };
    auto get_int = [&](const std::string& key, long long fallback) {
        auto it = table.find(key);
        if (it == table.end()) return fallback;
        if (it->second.kind != TomlValue::Kind::Integer)
            throw Error("key '" + key + "' must be an integer");
        return it->second.integer;
    };
    auto get_bool = [&](const std::string& key, bool fallback) {
        auto it = table.find(key);
        if (it == table.end()) return fallback;
        if (it->second.kind != TomlValue::Kind::Boolean)
            throw Error("key '" + key + "' must be a boolean");
        return it->second.boolean;
    };

    InstanceSpec spec;
    spec.name = get_str("name", "");
    spec.sigma = SigmaSpec::parse(get_str("sigma", "shift:1"));
    spec.b_text = get_str("b", "1/s");
    spec.L = static_cast<int>(get_int("L", 3));
    if (spec.L < 1) throw Error("L must be >= 1");
    spec.N0 = static_cast<long>(get_int("policy.N0", 0));
    spec.max_doublings = static_cast<int>(get_int("policy.max_doublings", 2));
    if (spec.max_doublings < 0) throw Error("policy.max_doublings must be >= 0");
    spec.seed = static_cast<std::uint64_t>(get_int("seed", 0));
    spec.certify_on_fail = get_bool("certify_on_fail", false);
    spec.g1_num = get_str("generators.g1_num", "1");
    spec.g1_den = get_str("generators.g1_den", "1-x");
    spec.g2_num = get_str("generators.g2_num", "");
    spec.g2_den = get_str("generators.g2_den", "1-x");

    // validate the expression fields eagerly so errors carry the file context
    spec.b();
    spec.g1();
    spec.g2();
    return spec;
}

inline InstanceSpec load_instance(const std::string& path) {
    try {
        return instance_from_toml(toml_parse_file(path));
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

/// End-to-end run: hypothesis check first, then certification when the
/// hypothesis holds (or when the instance explicitly asks for a flagged
/// negative-control run).
struct PipelineResult {
    std::string instance;
    HypothesisResult hypothesis;
    std::optional<FreenessCertificate> certificate;
    bool certification_skipped = false;
    double total_ms = 0;
};

inline PipelineResult run_pipeline(const InstanceSpec& spec, unsigned threads = 0) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    PipelineResult out;
    out.instance = spec.name;
    try {
        out.hypothesis = freeness_hypothesis(spec.b(), spec.sigma);
    } catch (const Error& e) {
        throw Error("hypothesis stage: " + std::string(e.what()));
    }
    if (out.hypothesis.holds || spec.certify_on_fail) {
        try {
            CertifyPolicy policy;
            policy.N0 = spec.N0;
            policy.max_doublings = spec.max_doublings;
            policy.threads = threads;
            auto cert = certify_free(spec.g1(), spec.g2(), spec.L, policy, spec.name);
            cert.g1_text = to_string(spec.g1().num) + " * (" + to_string(spec.g1().den) + ")^-1";
            cert.g2_text = to_string(spec.g2().num) + " * (" + to_string(spec.g2().den) + ")^-1";
            out.certificate = std::move(cert);
        } catch (const Error& e) {
            throw Error("certification stage: " + std::string(e.what()));
        }
    } else {
        out.certification_skipped = true;
    }
    out.total_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return out;
}

inline json pipeline_json(const PipelineResult& r) {
    json j;
    j["instance"] = r.instance;
    j["hypothesis"] = hypothesis_json(r.hypothesis);
    if (r.certificate)
        j["certificate"] = certificate_json(*r.certificate);
    else
        j["certificate"] = nullptr;
    j["certification_skipped"] = r.certification_skipped;
    j["timings"] = {{"total_ms", r.total_ms}};
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return json::parse(in);
}

}  // namespace orefree
