// orefree: exact certification toolkit for skew series, free-subalgebra
// certificates, sigma-difference equations, specialization reports, factor
// languages and the quaternion testbed.
//
// Exit codes: 0 success, 1 error, 2 inconclusive verdict, 64 usage.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "orefree/orefree.hpp"

namespace {

using namespace orefree;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("OREFREE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library default: hardware concurrency
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const json& payload, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << human;
}

int cmd_certify(const std::string& instance_path, int max_word_len, const std::string& out_path,
                bool as_json, unsigned threads) {
    InstanceSpec spec = load_instance(instance_path);
    if (max_word_len > 0) spec.L = max_word_len;
    CertifyPolicy policy{spec.N0, spec.max_doublings, resolve_threads(threads)};
    auto cert = certify_free(spec.g1(), spec.g2(), spec.L, policy, spec.name);
    cert.g1_text = to_string(spec.g1().num) + " * (" + to_string(spec.g1().den) + ")^-1";
    cert.g2_text = to_string(spec.g2().num) + " * (" + to_string(spec.g2().den) + ")^-1";
    json payload = certificate_json(cert);
    if (!out_path.empty()) write_json_file(out_path, payload);
    std::ostringstream human;
    human << "instance:  " << spec.name << "\n"
          << "sigma:     " << spec.sigma.str() << "\n"
          << "words:     " << cert.words.size() << " (L = " << cert.L << ")\n"
          << "order:     N = " << cert.N << "\n"
          << "verdict:   " << verdict_name(cert.verdict) << "\n";
    if (cert.verdict == FreenessCertificate::Verdict::DEPENDENT) {
        human << "relation:  ";
        for (std::size_t i = 0; i < cert.relation.size(); ++i)
            if (cert.relation[i] != 0)
                human << to_string(cert.relation[i]) << "*" << cert.words[i].str() << " ";
        human << "= 0\n";
    }
    emit(payload, as_json, human.str());
    return cert.verdict == FreenessCertificate::Verdict::INCONCLUSIVE ? kExitInconclusive : kExitOk;
}

int cmd_run(const std::string& instance_path, const std::string& out_path, bool as_json,
            unsigned threads) {
    InstanceSpec spec = load_instance(instance_path);
    auto result = run_pipeline(spec, resolve_threads(threads));
    json payload = pipeline_json(result);
    if (!out_path.empty()) write_json_file(out_path, payload);
    std::ostringstream human;
    human << "instance:   " << spec.name << "\n"
          << "hypothesis: " << (result.hypothesis.holds ? "HYPOTHESIS_HOLDS" : "FAILS") << "\n";
    if (!result.hypothesis.holds)
        human << "  u = " << to_string(result.hypothesis.u) << ", e = " << to_string(result.hypothesis.e)
              << "\n";
    if (result.certificate)
        human << "verdict:    " << verdict_name(result.certificate->verdict) << " at N = "
              << result.certificate->N << "\n";
    else
        human << "verdict:    certification skipped\n";
    emit(payload, as_json, human.str());
    if (result.certificate &&
        result.certificate->verdict == FreenessCertificate::Verdict::INCONCLUSIVE)
        return kExitInconclusive;
    return kExitOk;
}

int cmd_sigma_solve(const std::string& sigma_text, const std::string& f_text, bool as_json) {
    SigmaSpec sigma = SigmaSpec::parse(sigma_text);
    RatFunc f = parse_ratfunc(f_text);
    auto verdict = solve_additive(f, sigma);
    json payload = difference_verdict_json(verdict);
    std::ostringstream human;
    if (verdict.solvable)
        human << "SOLVABLE: u = " << to_string(verdict.u) << "\n";
    else if (verdict.obstruction)
        human << "UNSOLVABLE: pole orbit of " << to_string(verdict.obstruction->orbit_representative)
              << " has nonzero residue " << to_string(verdict.obstruction->residue) << "\n";
    else
        human << "UNSOLVABLE: constant term " << to_string(*verdict.constant_obstruction)
              << " obstructs\n";
    emit(payload, as_json, human.str());
    return kExitOk;
}

int cmd_words(std::string alphabet, std::string forbid, long horizon, bool dichotomy, bool periodic,
              bool growth_only, bool as_json, const std::string& instance_path) {
    std::vector<std::string> forbidden = split_list(forbid);
    if (!instance_path.empty()) {
        auto table = toml_parse_file(instance_path);
        for (const auto& [key, value] : table)
            if (key != "alphabet" && key != "forbid" && key != "horizon" && key != "name")
                throw Error("unknown key '" + key + "' in words instance file");
        if (auto it = table.find("alphabet"); it != table.end()) alphabet = it->second.str;
        if (auto it = table.find("forbid"); it != table.end()) forbidden = it->second.array;
        if (auto it = table.find("horizon"); it != table.end())
            horizon = static_cast<long>(it->second.integer);
    }
    auto lang = FactorLanguage::build(alphabet, forbidden);
    json payload;
    std::ostringstream human;
    if (periodic) {
        auto res = find_periodic_word(lang, horizon);
        payload = periodic_json(res);
        if (res.status == PeriodicWordResult::Status::FOUND)
            human << "PERIODIC: u = " << res.u << " (stabilization index " << res.stabilization_index
                  << ")\n";
        else
            human << (res.status == PeriodicWordResult::Status::FINITE ? "NOT_FOUND(finite)\n"
                                                                       : "NOT_FOUND(growth)\n");
    } else if (growth_only) {
        auto profile = growth(lang, horizon);
        payload = growth_json(profile);
        human << "n  f(n)  g(n)  cumulative\n";
        for (long n = 0; n <= std::min(horizon, 16L); ++n)
            human << n << "  " << profile.f[static_cast<std::size_t>(n)].str() << "  "
                  << profile.g[static_cast<std::size_t>(n)].str() << "  "
                  << profile.cumulative[static_cast<std::size_t>(n)].str() << "\n";
    } else {
        (void)dichotomy;  // the default mode
        auto res = gap_dichotomy(lang, horizon);
        payload = dichotomy_json(res);
        switch (res.kind) {
            case DichotomyResult::Kind::PERIODIC:
                human << "PERIODIC: u = " << res.periodic.u << " (f(" << res.witness_d << ") <= "
                      << res.witness_d << ")\n";
                break;
            case DichotomyResult::Kind::BINOMIAL_GROWTH:
                human << "BINOMIAL_GROWTH: cumulative f dominates (n+2 choose 2) up to horizon "
                      << horizon << "\n";
                break;
            default: human << "UNDETERMINED: " << res.note << "\n"; break;
        }
    }
    emit(payload, as_json, human.str());
    return kExitOk;
}

int cmd_testbed_centralizer(const std::string& a_text, bool as_json) {
    Quaternion a = parse_quaternion(a_text);
    auto basis = centralizer_basis(a);
    json jb = json::array();
    for (const auto& q : basis) jb.push_back(to_string(q));
    json payload = {{"a", to_string(a)}, {"dimension", basis.size()}, {"basis", jb}};
    std::ostringstream human;
    human << "C(" << to_string(a) << "; H) has dimension " << basis.size() << "; basis:";
    for (const auto& q : basis) human << " " << to_string(q) << ";";
    human << "\n";
    emit(payload, as_json, human.str());
    return kExitOk;
}

int cmd_testbed_clear(const std::string& a_text, bool as_json) {
    Quaternion a = parse_quaternion(a_text);
    auto res = clear_left_denominator(a);
    json payload = {{"a", to_string(a)},
                    {"p", to_string(res.p, "t")},
                    {"cofactor", poly_to_string(res.cofactor, "t",
                                                [](const Quaternion& q) { return to_string(q); })}};
    std::ostringstream human;
    human << "p(t) = " << to_string(res.p, "t") << "\n"
          << "cofactor = "
          << poly_to_string(res.cofactor, "t", [](const Quaternion& q) { return to_string(q); }) << "\n"
          << "(1 - a t) * cofactor = p(t) holds exactly\n";
    emit(payload, as_json, human.str());
    return kExitOk;
}

int cmd_testbed_embed(const std::string& w_text, long order, bool as_json) {
    QuatRat w = parse_quatrat(w_text);
    auto series = embed_series(w, order);
    json payload = quat_series_json(series);
    emit(payload, as_json, to_string(series) + "\n");
    return kExitOk;
}

int cmd_specialize(const std::string& elements_text, bool as_json) {
    auto texts = split_list(elements_text);
    if (texts.empty()) throw Error("need at least one element");
    std::vector<PolyT> f, g;
    for (const auto& t : texts) {
        auto elem = parse_st_element(t);
        f.push_back(elem.num());
        g.push_back(elem.den());
    }
    auto rep = dependence_over_kt(f, g);
    rep.elements = texts;
    json payload = specialization_json(rep);
    std::ostringstream human;
    human << (rep.independent ? "INDEPENDENT over Q(t)" : "DEPENDENT over Q(t)") << "\n";
    if (rep.independent) {
        human << "witness minor: " << to_string(rep.witness_minor, "t") << "\n" << "bad points:";
        for (const auto& b : rep.bad_points) human << " " << to_string(b);
        human << "\n";
    } else {
        human << "relation:";
        for (const auto& e : rep.relation) human << " " << to_string(e, "t") << ";";
        human << "\n";
    }
    emit(payload, as_json, human.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orefree: exact skew-series and free-subalgebra certification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    unsigned threads = 0;
    app.add_flag("--json", as_json, "emit JSON instead of the human summary");
    app.add_option("--threads", threads, "worker threads (default: OREFREE_THREADS or all cores)");

    std::string instance_path, out_path;
    int max_word_len = 0;
    auto* certify = app.add_subcommand("certify", "freeness certificate for an instance file");
    certify->fallthrough();
    certify->add_option("--instance", instance_path, "instance TOML file")->required();
    certify->add_option("--max-word-len", max_word_len, "override the instance's word length L");
    certify->add_option("--out", out_path, "write the certificate JSON here");

    auto* runcmd = app.add_subcommand("run", "hypothesis check plus certification pipeline");
    runcmd->fallthrough();
    runcmd->add_option("--instance", instance_path, "instance TOML file")->required();
    runcmd->add_option("--out", out_path, "write the pipeline JSON here");

    std::string sigma_text = "shift:1", f_text;
    auto* solve = app.add_subcommand("sigma-solve", "decide sigma(u) - u = f over Q(s)");
    solve->fallthrough();
    solve->add_option("--sigma", sigma_text, "automorphism, e.g. shift:1 or dilation:2");
    solve->add_option("--f", f_text, "right-hand side, e.g. 1/s")->required();

    std::string alphabet = "xy", forbid;
    long horizon = 64;
    bool dichotomy = false, periodic = false, growth_only = false;
    auto* words = app.add_subcommand("words", "factor-language growth, periodic words, dichotomy");
    words->fallthrough();
    std::string words_instance;
    words->add_option("--instance", words_instance, "words instance TOML file");
    words->add_option("--alphabet", alphabet, "alphabet letters, e.g. xy");
    words->add_option("--forbid", forbid, "comma-separated forbidden factors, e.g. yy,xx");
    words->add_option("--horizon", horizon, "growth horizon (default 64)");
    words->add_flag("--dichotomy", dichotomy, "growth dichotomy (default mode)");
    words->add_flag("--periodic", periodic, "periodic-word extraction only");
    words->add_flag("--growth", growth_only, "growth profile only");

    auto* testbed = app.add_subcommand("testbed", "quaternion division-ring testbed");
    testbed->require_subcommand(1);
    testbed->fallthrough();
    std::string a_text = "i", w_text;
    long order = 4;
    auto* cent = testbed->add_subcommand("centralizer", "basis of C(a; H)");
    cent->fallthrough();
    cent->add_option("--a", a_text, "quaternion, e.g. i or 1+i")->required();
    auto* clear = testbed->add_subcommand("clear-denominator",
                                          "central p(t) with p(t)(1-at)^{-1} polynomial");
    clear->fallthrough();
    clear->add_option("--a", a_text, "quaternion")->required();
    auto* embed = testbed->add_subcommand("embed", "series expansion of an H(t) element");
    embed->fallthrough();
    embed->add_option("--w", w_text, "element of H(t), e.g. (1-i*t)^-1")->required();
    embed->add_option("--order", order, "truncation order (default 4)");

    std::string elements_text;
    auto* specialize = app.add_subcommand("specialize", "dependence over Q(t) with bad-point report");
    specialize->fallthrough();
    specialize->add_option("--elements", elements_text, "comma-separated elements of Q(s)(t)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (certify->parsed()) return cmd_certify(instance_path, max_word_len, out_path, as_json, threads);
        if (runcmd->parsed()) return cmd_run(instance_path, out_path, as_json, threads);
        if (solve->parsed()) return cmd_sigma_solve(sigma_text, f_text, as_json);
        if (words->parsed())
            return cmd_words(alphabet, forbid, horizon, dichotomy, periodic, growth_only, as_json,
                             words_instance);
        if (testbed->parsed()) {
            if (cent->parsed()) return cmd_testbed_centralizer(a_text, as_json);
            if (clear->parsed()) return cmd_testbed_clear(a_text, as_json);
            if (embed->parsed()) return cmd_testbed_embed(w_text, order, as_json);
        }
        if (specialize->parsed()) return cmd_specialize(elements_text, as_json);
    } catch (const std::exception& e) {
        json err = {{"error", e.what()}};
        if (as_json)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
