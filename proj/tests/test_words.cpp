#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/oracles.hpp"

using namespace orefree;

namespace {

/// String-level membership, independent of the automaton.
bool naive_member(const std::string& w, const std::vector<std::string>& forbidden) {
    for (const auto& f : forbidden)
        if (w.find(f) != std::string::npos) return false;
    return true;
}

long naive_count(long n, const std::string& alphabet, const std::vector<std::string>& forbidden) {
    long count = 0;
    std::string word(static_cast<std::size_t>(n), alphabet[0]);
    auto rec = [&](auto&& self, long pos) -> void {
        if (pos == n) {
            if (naive_member(word, forbidden)) ++count;
            return;
        }
        for (char c : alphabet) {
            word[static_cast<std::size_t>(pos)] = c;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

TEST_CASE("membership through the factor automaton") {
    auto lang = FactorLanguage::build("xy", {"yy"});
    CHECK(lang.member("xyx"));
    CHECK_FALSE(lang.member("xyyx"));
    CHECK(lang.member(""));

    auto trivial = FactorLanguage::build("xy", {});
    CHECK(trivial.member("yyyyxxyx"));

    auto alternating = FactorLanguage::build("xy", {"xx", "yy"});
    for (long n = 0; n <= 6; ++n) {
        auto words = enumerate_members(alternating, n);
        for (const auto& w : words) {
            for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] != w[i - 1]);
        }
        CHECK(static_cast<long>(words.size()) == (n == 0 ? 1 : 2));
    }

    CHECK_THROWS_AS(FactorLanguage::build("", {}), Error);
    CHECK_THROWS_AS(FactorLanguage::build("xy", {""}), Error);
    CHECK_THROWS_AS(FactorLanguage::build("xy", {"xz"}), Error);
    CHECK_THROWS_AS(FactorLanguage::build("xx", {}), Error);
}

TEST_CASE("growth profiles on the worked languages") {
    auto alternating = FactorLanguage::build("xy", {"xx", "yy"});
    auto p = growth(alternating, 8);
    CHECK(p.f[0] == 1);
    for (long n = 1; n <= 8; ++n) CHECK(p.f[static_cast<std::size_t>(n)] == 2);
    for (long n = 1; n <= 8; ++n) CHECK(p.g[static_cast<std::size_t>(n)] == 2);

    auto noyy = FactorLanguage::build("xy", {"yy"});
    auto q = growth(noyy, 6);
    std::vector<int> fib{1, 2, 3, 5, 8, 13, 21};
    for (long n = 0; n <= 6; ++n) CHECK(q.f[static_cast<std::size_t>(n)] == fib[static_cast<std::size_t>(n)]);

    auto full = FactorLanguage::build("xy", {});
    auto r = growth(full, 10);
    for (long n = 0; n <= 10; ++n) CHECK(r.f[static_cast<std::size_t>(n)] == Int(1) << n);
}

TEST_CASE("automaton counts match brute-force enumeration to length 12") {
    std::vector<std::vector<std::string>> families{{}, {"yy"}, {"xx", "yy"}, {"yy", "yx"}, {"xyx"}};
    for (const auto& forbidden : families) {
        auto lang = FactorLanguage::build("xy", forbidden);
        auto p = growth(lang, 12);
        for (long n = 0; n <= 12; ++n)
            CHECK(p.f[static_cast<std::size_t>(n)] == naive_count(n, "xy", forbidden));
    }
}

TEST_CASE("extendable-word counts match a string-level pumping check") {
    std::vector<std::vector<std::string>> families{{"yy"}, {"xx", "yy"}, {"yy", "yx"}, {}};
    for (const auto& forbidden : families) {
        auto lang = FactorLanguage::build("xy", forbidden);
        long pumping = static_cast<long>(lang.states()) + 1;
        auto p = growth(lang, 12);
        for (long n = 0; n <= 12; ++n) {
            // w in V_n iff some extension of length n + pumping stays in W
            long count = 0;
            for (const auto& w : enumerate_members(lang, n)) {
                bool extendable = false;
                auto rec = [&](auto&& self, const std::string& cur) -> void {
                    if (extendable) return;
                    if (static_cast<long>(cur.size()) == n + pumping) {
                        extendable = true;
                        return;
                    }
                    for (char c : lang.alphabet()) {
                        std::string next = cur + c;
                        if (naive_member(next, forbidden)) self(self, next);
                    }
                };
                rec(rec, w);
                if (extendable) ++count;
            }
            CHECK(p.g[static_cast<std::size_t>(n)] == count);
        }
    }
}

TEST_CASE("periodic word extraction on the worked languages") {
    auto alternating = FactorLanguage::build("xy", {"xx", "yy"});
    auto res = find_periodic_word(alternating, 64);
    REQUIRE(res.status == PeriodicWordResult::Status::FOUND);
    CHECK(res.u == "xy");
    CHECK(res.stabilization_index == 1);
    CHECK(res.verified_powers == 20);
    CHECK_FALSE(res.cycle_states.empty());
    std::string power;
    for (int n = 1; n <= 20; ++n) {
        power += res.u;
        CHECK(alternating.member(power));
    }

    // after y nothing continues, so V is the x-tail
    auto xtail = FactorLanguage::build("xy", {"yy", "yx"});
    auto res2 = find_periodic_word(xtail, 64);
    REQUIRE(res2.status == PeriodicWordResult::Status::FOUND);
    CHECK(res2.u == "x");

    auto full = FactorLanguage::build("xy", {});
    auto res3 = find_periodic_word(full, 40);
    CHECK(res3.status == PeriodicWordResult::Status::HORIZON);

    auto finite = FactorLanguage::build("xy", {"x", "yy"});
    auto res4 = find_periodic_word(finite, 40);
    CHECK(res4.status == PeriodicWordResult::Status::FINITE);
}

TEST_CASE("unique extension law once g stabilizes") {
    std::vector<std::vector<std::string>> families{{"xx", "yy"}, {"yy", "yx"}, {"xy", "yx"}};
    for (const auto& forbidden : families) {
        auto lang = FactorLanguage::build("xy", forbidden);
        if (!lang.is_infinite()) continue;
        auto p = growth(lang, 40);
        long i = -1;
        for (long n = 0; n < 40; ++n)
            if (p.g[static_cast<std::size_t>(n)] == p.g[static_cast<std::size_t>(n + 1)]) {
                i = n;
                break;
            }
        REQUIRE(i >= 0);
        for (long n = i; n <= 40; ++n) CHECK(p.g[static_cast<std::size_t>(n)] == p.g[static_cast<std::size_t>(i)]);
        if (i >= 1) {
            auto vi = enumerate_extendable(lang, i);
            auto vi1 = enumerate_extendable(lang, i + 1);
            for (const auto& w : vi) {
                long extensions = 0;
                for (const auto& w1 : vi1)
                    if (w1.substr(0, w.size()) == w) ++extensions;
                CHECK(extensions == 1);
            }
        }
    }
}

TEST_CASE("V_n stabilizes as prefixes of long members") {
    auto lang = FactorLanguage::build("xy", {"yy", "xyx"});
    long states = static_cast<long>(lang.states());
    for (long n = 0; n <= 6; ++n) {
        long p = n + states;
        std::set<std::string> prefixes;
        for (const auto& w : enumerate_members(lang, p)) prefixes.insert(w.substr(0, static_cast<std::size_t>(n)));
        auto vn = enumerate_extendable(lang, n);
        CHECK(prefixes == std::set<std::string>(vn.begin(), vn.end()));
    }
}

TEST_CASE("gap dichotomy on the three reference languages") {
    auto alternating = FactorLanguage::build("xy", {"xx", "yy"});
    auto d1 = gap_dichotomy(alternating, 20);
    REQUIRE(d1.kind == DichotomyResult::Kind::PERIODIC);
    CHECK(d1.periodic.u == "xy");
    CHECK(d1.witness_d == 2);  // f(2) = 2 is the first crossing

    auto noyy = FactorLanguage::build("xy", {"yy"});
    auto d2 = gap_dichotomy(noyy, 20);
    REQUIRE(d2.kind == DichotomyResult::Kind::BINOMIAL_GROWTH);
    std::vector<int> cum{1, 3, 6, 11, 19, 32};
    for (std::size_t n = 0; n < cum.size(); ++n)
        CHECK(d2.profile.cumulative[n] == cum[n]);
    for (long n = 0; n <= 20; ++n) {
        Int binom = Int(n + 2) * Int(n + 1) / 2;
        CHECK(d2.profile.cumulative[static_cast<std::size_t>(n)] >= binom);
    }

    auto full = FactorLanguage::build("xy", {});
    auto d3 = gap_dichotomy(full, 20);
    CHECK(d3.kind == DichotomyResult::Kind::BINOMIAL_GROWTH);

    auto finite = FactorLanguage::build("xy", {"x", "y"});
    auto d4 = gap_dichotomy(finite, 20);
    CHECK(d4.kind == DichotomyResult::Kind::UNDETERMINED);
}

TEST_CASE("random members are subword-closed and profile invariants hold") {
    std::mt19937_64 rng(61);
    std::vector<std::vector<std::string>> families{{"yy"}, {"xx", "yy"}, {"xyx", "yy"}};
    for (const auto& forbidden : families) {
        auto lang = FactorLanguage::build("xy", forbidden);
        auto p = growth(lang, 16);
        for (long n = 0; n <= 16; ++n) {
            CHECK(p.f[static_cast<std::size_t>(n)] >= p.g[static_cast<std::size_t>(n)]);
            if (n > 0) CHECK(p.g[static_cast<std::size_t>(n)] >= p.g[static_cast<std::size_t>(n - 1)]);
        }
        // random accepted words: every factor is accepted
        for (int trial = 0; trial < 34; ++trial) {
            std::string w;
            int state = lang.start();
            std::uniform_int_distribution<std::size_t> pick(0, lang.letters() - 1);
            for (int step = 0; step < 12; ++step) {
                std::size_t l = pick(rng);
                int next = lang.step(state, l);
                if (next < 0) break;
                state = next;
                w += lang.alphabet()[l];
            }
            REQUIRE(lang.member(w));
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t len = 1; i + len <= w.size(); ++len)
                    CHECK(lang.member(w.substr(i, len)));
        }
    }
}
