// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Criterion 1 asserts the catalogued INDEPENDENT expectation for the Weyl
// instance verbatim.  The configuration carries an exact telescoped
// relation (sigma(s) = s+1 admits u = s with sigma(u) = u+1), so the
// honest verdict is DEPENDENT and the criterion reports FAIL; the engine's
// relation is itself re-verified here at a higher order, so the failure is
// a property of the expectation, not of the engine.  The README covers the
// analysis.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"

using namespace orefree;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, const std::vector<std::string>& problems,
            double seconds) {
    std::ostringstream line;
    if (problems.empty()) {
        line << "[PASS] criterion " << criterion << ": " << name;
    } else {
        ++failures;
        line << "[FAIL] criterion " << criterion << ": " << name << " — " << problems.front();
        if (problems.size() > 1) line << " (+" << problems.size() - 1 << " more)";
    }
    line << " (" << seconds << "s)";
    std::cout << line.str() << std::endl;
}

template <class Fn>
void criterion(int number, const std::string& name, Fn&& body) {
    std::vector<std::string> problems;
    auto t0 = Clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    report(number, name, problems, std::chrono::duration<double>(Clock::now() - t0).count());
}

std::string instance(const std::string& name) {
    return std::string(OREFREE_INSTANCE_DIR) + "/" + name;
}

const SigmaSpec kShift1 = SigmaSpec::shift(Rational(1));

}  // namespace

int main() {
    auto suite_t0 = Clock::now();

    criterion(1, "Weyl freeness certificate (L=3 and L=4, stable, <= 60s)", [](auto& problems) {
        auto t0 = Clock::now();
        auto spec = load_instance(instance("weyl.toml"));
        auto g1 = spec.g1(), g2 = spec.g2();
        auto l3 = certify_free(g1, g2, 3, {.N0 = 0, .max_doublings = 2, .threads = 0}, "weyl");
        if (l3.verdict != FreenessCertificate::Verdict::INDEPENDENT)
            problems.push_back("L=3 verdict is " + std::string(verdict_name(l3.verdict)) +
                               ", not INDEPENDENT (exact relation g1g2 - g2g1 - g2g2 + g2g1g2 = 0; "
                               "see the README note)");
        auto l4 = certify_free(g1, g2, 4, {.N0 = 16, .max_doublings = 2, .threads = 0}, "weyl");
        if (l4.verdict != FreenessCertificate::Verdict::INDEPENDENT)
            problems.push_back("L=4 verdict is " + std::string(verdict_name(l4.verdict)));
        auto l3x2 = certify_free(g1, g2, 3, {.N0 = 24, .max_doublings = 0, .threads = 0});
        if (l3x2.verdict != l3.verdict) problems.push_back("verdict not stable under doubling at L=3");
        auto l4x2 = certify_free(g1, g2, 4, {.N0 = 32, .max_doublings = 0, .threads = 0});
        if (l4x2.verdict != l4.verdict) problems.push_back("verdict not stable under doubling at L=4");
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs > 60.0) problems.push_back("wall clock exceeded 60s");
        // the found relation must itself be sound: re-verify at high order
        if (l3.verdict == FreenessCertificate::Verdict::DEPENDENT) {
            long N = 48;
            auto series = expand_words(g1, g2, 3, N, 0);
            Series acc = Series::zero_to(kShift1, N);
            for (std::size_t i = 0; i < series.size(); ++i)
                if (l3.relation[i] != 0)
                    acc = acc + Series::from_constant(kShift1, RatFunc(l3.relation[i]), N) * series[i];
            if (!acc.is_zero_to_window())
                problems.push_back("reported relation failed the independent high-order recheck");
        }
    });

    criterion(2, "negative controls (proportional generators; b = s; b = 1)", [](auto& problems) {
        auto prop = run_pipeline(load_instance(instance("proportional.toml")), 0);
        if (!prop.certificate || prop.certificate->verdict != FreenessCertificate::Verdict::DEPENDENT)
            problems.push_back("proportional instance did not certify DEPENDENT");
        else if (prop.certificate->relation != std::vector<Rational>{Rational(2), Rational(-1)})
            problems.push_back("proportional relation is not (2, -1)");

        auto negs = run_pipeline(load_instance(instance("negative-b-s.toml")), 0);
        if (negs.hypothesis.holds) problems.push_back("b = s should FAIL the hypothesis");
        RatFunc b_s = parse_ratfunc("s");
        if (sigma_apply(negs.hypothesis.u, kShift1, 1) - negs.hypothesis.u !=
            b_s + RatFunc(negs.hypothesis.e))
            problems.push_back("b = s: sigma(u) - u != b + e");
        if (negs.hypothesis.u != parse_ratfunc("(s^2-s)/2") || negs.hypothesis.e != Rational(0))
            problems.push_back("b = s: (u, e) is not ((s^2-s)/2, 0)");

        auto neg1 = run_pipeline(load_instance(instance("negative-b-1.toml")), 0);
        if (neg1.hypothesis.holds) problems.push_back("b = 1 should FAIL the hypothesis");
        if (sigma_apply(neg1.hypothesis.u, kShift1, 1) - neg1.hypothesis.u !=
            RatFunc(1) + RatFunc(neg1.hypothesis.e))
            problems.push_back("b = 1: sigma(u) - u != b + e");
        if (neg1.hypothesis.u != RatFunc(0) || neg1.hypothesis.e != Rational(-1))
            problems.push_back("b = 1: (u, e) is not (0, -1)");
    });

    criterion(3, "sigma-equation decisions with the bounded brute-force oracle", [](auto& problems) {
        auto one = solve_additive(RatFunc(1), kShift1);
        if (!one.solvable || one.u != parse_ratfunc("s")) problems.push_back("f = 1 should give u = s");
        auto lin = solve_additive(parse_ratfunc("s"), kShift1);
        if (!lin.solvable || lin.u != parse_ratfunc("(s^2-s)/2"))
            problems.push_back("f = s should give u = (s^2-s)/2");
        auto harmonic = solve_additive(parse_ratfunc("1/s"), kShift1);
        if (harmonic.solvable) problems.push_back("f = 1/s must be UNSOLVABLE");
        auto oracle = oracles::bounded_ansatz_solve(parse_ratfunc("1/s"), kShift1, 6, 3, 5);
        if (oracle.solvable) problems.push_back("oracle found a bounded solution for 1/s");

        oracles::Rng rng(2026);
        int agreements = 0;
        for (int i = 0; i < 30; ++i) {
            RatFunc f = oracles::random_ratfunc_linear_poles(rng, 3, 2, 2);
            if (i % 2 == 0) {
                RatFunc g = oracles::random_ratfunc_linear_poles(rng, 2, 2, 2);
                f = sigma_apply(g, kShift1, 1) - g;
            }
            auto verdict = solve_additive(f, kShift1);
            auto o = oracles::bounded_ansatz_solve(f, kShift1, 6, 3, 5);
            if (verdict.solvable == o.solvable)
                ++agreements;
            else
                problems.push_back("solver/oracle disagreement on sample " + std::to_string(i));
            if (verdict.solvable && sigma_apply(verdict.u, kShift1, 1) - verdict.u != f)
                problems.push_back("solver solution failed substitution");
        }
        if (agreements != 30) problems.push_back("agreements = " + std::to_string(agreements) + "/30");
    });

    criterion(4, "coefficient-matrix machinery over Q(t) with bad-point enumeration",
              [](auto& problems) {
        auto one = parse_st_element("1"), st = parse_st_element("s*t");
        auto rep = dependence_over_kt({one.num(), st.num()}, {one.den(), st.den()});
        if (!rep.independent) problems.push_back("{1, s*t} must be independent over Q(t)");
        if (rep.bad_points != std::vector<Rational>{Rational(0)})
            problems.push_back("{1, s*t} bad set is not exactly {0}");
        if (specialized_rank(rep, Rational(0)) != 1)
            problems.push_back("alpha = 0 must lose rank");
        int good = 0;
        for (int a = 1; good < 20; ++a) {
            for (int sign : {1, -1}) {
                Rational alpha(sign * a);
                if (alpha == 0) continue;
                if (specialized_rank(rep, alpha) != 2)
                    problems.push_back("good alpha " + to_string(alpha) + " lost rank");
                if (++good >= 20) break;
            }
        }

        oracles::Rng rng(2027);
        std::uniform_int_distribution<int> n_elems(2, 3), tdeg(0, 2), sdeg(0, 2), coin(0, 3);
        for (int trial = 0; trial < 50; ++trial) {
            int n = n_elems(rng);
            std::vector<PolyT> f, g;
            for (int i = 0; i < n; ++i) {
                std::vector<RatFunc> coeffs;
                for (int d = 0; d <= tdeg(rng); ++d)
                    coeffs.push_back(RatFunc(oracles::random_poly(rng, sdeg(rng), 3)));
                PolyT fi(std::move(coeffs));
                if (fi.is_zero()) fi = PolyT(RatFunc(1));
                f.push_back(fi);
                g.push_back(coin(rng) == 0 ? PolyT(std::vector<RatFunc>{RatFunc(1), RatFunc(1)})
                                           : PolyT(RatFunc(1)));
            }
            if (coin(rng) == 0) f[1] = f[0] * PolyT(std::vector<RatFunc>{RatFunc(0), RatFunc(1)});
            auto r = dependence_over_kt(f, g);
            if (r.independent == oracles::naive_dependent_over_qt(f, g))
                problems.push_back("minor route and nullspace oracle disagree on family " +
                                   std::to_string(trial));
        }
    });

    criterion(5, "periodic-word extraction with automaton-cycle proof", [](auto& problems) {
        auto lang = FactorLanguage::build("xy", {"xx", "yy"});
        auto res = find_periodic_word(lang, 64);
        if (res.status != PeriodicWordResult::Status::FOUND || res.u != "xy")
            problems.push_back("F = {xx, yy} must extract u = xy");
        std::string power;
        for (int n = 1; n <= 20; ++n) {
            power += res.u;
            if (!lang.member(power)) problems.push_back("u^" + std::to_string(n) + " left W");
        }
        if (res.cycle_states.empty()) problems.push_back("missing automaton cycle proof");
        // g-stabilization and unique extensions
        auto profile = growth(lang, 24);
        long i = res.stabilization_index;
        if (i < 0 || profile.g[static_cast<std::size_t>(i)] != profile.g[static_cast<std::size_t>(i + 1)])
            problems.push_back("stabilization index is wrong");
        for (long n = i; n <= 24; ++n)
            if (profile.g[static_cast<std::size_t>(n)] != profile.g[static_cast<std::size_t>(i)])
                problems.push_back("g(n) drifted after stabilization");
        auto vi = enumerate_extendable(lang, i);
        auto vi1 = enumerate_extendable(lang, i + 1);
        for (const auto& w : vi) {
            int extensions = 0;
            for (const auto& w1 : vi1)
                if (w1.substr(0, w.size()) == w) ++extensions;
            if (extensions != 1) problems.push_back("extension of " + w + " inside V not unique");
        }
        // automaton counts versus brute force to n = 12
        for (long n = 0; n <= 12; ++n) {
            long count = 0;
            std::string word(static_cast<std::size_t>(n), 'x');
            auto rec = [&](auto&& self, long pos) -> void {
                if (pos == n) {
                    bool ok = true;
                    for (std::size_t k = 0; k + 1 < word.size() && ok; ++k)
                        if (word[k] == word[k + 1]) ok = false;
                    if (ok) ++count;
                    return;
                }
                for (char c : {'x', 'y'}) {
                    word[static_cast<std::size_t>(pos)] = c;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
            if (profile.f[static_cast<std::size_t>(n)] != count)
                problems.push_back("f(" + std::to_string(n) + ") disagrees with enumeration");
        }
    });

    criterion(6, "growth dichotomy on {yy}, {} and {xx, yy}", [](auto& problems) {
        auto noyy = gap_dichotomy(FactorLanguage::build("xy", {"yy"}), 20);
        if (noyy.kind != DichotomyResult::Kind::BINOMIAL_GROWTH)
            problems.push_back("F = {yy} must be BINOMIAL_GROWTH");
        auto full = gap_dichotomy(FactorLanguage::build("xy", {}), 20);
        if (full.kind != DichotomyResult::Kind::BINOMIAL_GROWTH)
            problems.push_back("F = {} must be BINOMIAL_GROWTH");
        for (const auto* profile : {&noyy.profile, &full.profile})
            for (long n = 0; n <= 20; ++n) {
                Int binom = Int(n + 2) * Int(n + 1) / 2;
                if ((*profile).cumulative[static_cast<std::size_t>(n)] < binom)
                    problems.push_back("cumulative f fell below (n+2 choose 2) at n = " +
                                       std::to_string(n));
            }
        auto alt = gap_dichotomy(FactorLanguage::build("xy", {"xx", "yy"}), 20);
        if (alt.kind != DichotomyResult::Kind::PERIODIC || alt.periodic.u != "xy")
            problems.push_back("F = {xx, yy} must route to PERIODIC(xy)");
    });

    criterion(7, "centralizer testbed: Z(t) membership and dimensions", [](auto& problems) {
        std::mt19937_64 rng(2028);
        std::uniform_int_distribution<int> c(-5, 5), deg(0, 3);
        auto basis = centralizer_basis(Quaternion::i());
        if (basis.size() != 2) problems.push_back("dim C(i; H) != 2");
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Quaternion> coeffs;
            for (int k = 0; k <= deg(rng); ++k) {
                Quaternion q(0);
                for (const auto& b : basis) q += b * Quaternion(Rational(c(rng)));
                coeffs.push_back(q);
            }
            PolyQ den(1);
            for (int k = deg(rng); k > 0; --k)
                den = den * PolyQ(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
            QuatRat w(QuatPoly(coeffs), den);
            auto verdict = verify_centralizer_in_Dt(w, Quaternion::i());
            if (verdict == CentralizerMembership::COMMUTING_BUT_OUTSIDE)
                problems.push_back("impossible flag fired");
            if (!w.num().is_zero() && verdict != CentralizerMembership::IN_Zt)
                problems.push_back("Z(t) member not recognized");
        }
        for (int trial = 0; trial < 100; ++trial) {
            Quaternion a{Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
            auto cb = centralizer_basis(a);
            if (cb.size() != (a.is_central() ? 4u : 2u))
                problems.push_back("centralizer dimension wrong for sample " + std::to_string(trial));
        }
    });

    criterion(8, "denominator clearing identity and canonical embedding", [](auto& problems) {
        std::mt19937_64 rng(2029);
        std::uniform_int_distribution<int> c(-6, 6);
        for (int trial = 0; trial < 100; ++trial) {
            Quaternion a{Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
            auto res = clear_left_denominator(a);
            QuatPoly lhs = QuatPoly(std::vector<Quaternion>{Quaternion(1), -a}) * res.cofactor;
            PolyQ expect(std::vector<Rational>{Rational(1), -a.trace(), a.norm()});
            if (lhs != promote(expect) || res.p != expect)
                problems.push_back("clearing identity failed for sample " + std::to_string(trial));
        }
        auto cyc = embed_series(parse_quatrat("(1-i*t)^-1"), 4);
        std::vector<Quaternion> expect{Quaternion(1), Quaternion::i(), Quaternion(-1),
                                       -Quaternion::i(), Quaternion(1)};
        for (long n = 0; n <= 4; ++n)
            if (cyc.coeff(n) != expect[static_cast<std::size_t>(n)])
                problems.push_back("embed_series of (1-it)^{-1} wrong at t^" + std::to_string(n));
    });

    criterion(9, "determinism, persistence and full-registry run within 5 minutes",
              [](auto& problems) {
        auto t0 = Clock::now();
        for (const char* name : {"weyl.toml", "q-weyl.toml", "negative-b-s.toml",
                                 "negative-b-1.toml", "proportional.toml"}) {
            auto spec = load_instance(instance(name));
            auto first = pipeline_json(run_pipeline(spec, 0));
            auto second = pipeline_json(run_pipeline(spec, 1));
            if (strip_volatile(first).dump() != strip_volatile(second).dump())
                problems.push_back(std::string(name) + " is not deterministic");
            std::string path = std::string("/tmp/orefree_acceptance_") + name + ".json";
            write_json_file(path, first);
            if (load_json_file(path) != first)
                problems.push_back(std::string(name) + " did not survive persistence");
        }
        for (const char* name : {"words-alternating.toml", "words-no-yy.toml", "words-free.toml"}) {
            auto table = toml_parse_file(instance(name));
            auto lang = FactorLanguage::build(table.at("alphabet").str, table.at("forbid").array);
            auto d1 = gap_dichotomy(lang, 64);
            auto d2 = gap_dichotomy(lang, 64);
            if (dichotomy_json(d1).dump() != dichotomy_json(d2).dump())
                problems.push_back(std::string(name) + " is not deterministic");
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs > 300.0) problems.push_back("registry run exceeded 5 minutes");
    });

    double total = std::chrono::duration<double>(Clock::now() - suite_t0).count();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << " in " << total << "s" << std::endl;
    return failures;
}
