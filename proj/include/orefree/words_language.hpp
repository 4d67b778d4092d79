#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "orefree/errors.hpp"
#include "orefree/rational.hpp"

namespace orefree {

/// Subword-closed language over a finite alphabet, presented by forbidden
/// factors and compiled to a factor automaton (Aho-Corasick trie with
/// failure links and an absorbing dead state).  The automaton accepts
/// exactly the words with no factor in F, so subword closure holds by
/// construction.
class FactorLanguage {
public:
    static FactorLanguage build(const std::string& alphabet, const std::vector<std::string>& forbidden) {
        if (alphabet.empty()) throw Error("alphabet must be nonempty");
        if (alphabet.size() > 26) throw Error("alphabet size is capped at 26");
        FactorLanguage lang;
        lang.alphabet_ = alphabet;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (lang.letter_index_.count(alphabet[i])) throw Error("alphabet letters must be distinct");
            lang.letter_index_[alphabet[i]] = i;
        }
        for (const auto& w : forbidden) {
            if (w.empty()) throw Error("forbidden factors must be nonempty");
            for (char ch : w)
                if (!lang.letter_index_.count(ch))
                    throw Error(std::string("forbidden factor uses letter '") + ch +
                                "' outside the alphabet");
        }
        lang.forbidden_ = forbidden;
        lang.compile();
        return lang;
    }

    const std::string& alphabet() const { return alphabet_; }
    const std::vector<std::string>& forbidden() const { return forbidden_; }
    std::size_t letters() const { return alphabet_.size(); }
    std::size_t states() const { return next_.size(); }
    int start() const { return 0; }

    /// -1 is the dead state.
    int step(int state, std::size_t letter) const {
        if (state < 0) return -1;
        return next_[static_cast<std::size_t>(state)][letter];
    }
    int run(int state, const std::string& word) const {
        for (char ch : word) {
            auto it = letter_index_.find(ch);
            if (it == letter_index_.end()) throw Error(std::string("letter '") + ch + "' outside the alphabet");
            state = step(state, it->second);
            if (state < 0) return -1;
        }
        return state;
    }
    bool member(const std::string& word) const { return run(0, word) >= 0; }

    /// States from which arbitrarily long live continuations exist (states
    /// that can reach a cycle in the live graph).
    const std::vector<bool>& extendable() const { return extendable_; }
    bool is_infinite() const { return extendable_[0]; }

private:
    void compile() {
        // trie of the forbidden factors
        struct Node {
            std::vector<int> child;
            int fail = 0;
            bool terminal = false;
        };
        std::vector<Node> trie(1, Node{std::vector<int>(letters(), -1), 0, false});
        for (const auto& w : forbidden_) {
            int cur = 0;
            for (char ch : w) {
                std::size_t l = letter_index_.at(ch);
                if (trie[static_cast<std::size_t>(cur)].child[l] < 0) {
                    trie[static_cast<std::size_t>(cur)].child[l] = static_cast<int>(trie.size());
                    trie.push_back(Node{std::vector<int>(letters(), -1), 0, false});
                }
                cur = trie[static_cast<std::size_t>(cur)].child[l];
            }
            trie[static_cast<std::size_t>(cur)].terminal = true;
        }
        // BFS failure links; terminal flags propagate along them
        std::deque<int> queue;
        for (std::size_t l = 0; l < letters(); ++l) {
            int c = trie[0].child[l];
            if (c < 0)
                trie[0].child[l] = 0;
            else {
                trie[static_cast<std::size_t>(c)].fail = 0;
                queue.push_back(c);
            }
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            trie[static_cast<std::size_t>(u)].terminal =
                trie[static_cast<std::size_t>(u)].terminal ||
                trie[static_cast<std::size_t>(trie[static_cast<std::size_t>(u)].fail)].terminal;
            for (std::size_t l = 0; l < letters(); ++l) {
                int c = trie[static_cast<std::size_t>(u)].child[l];
                int f = trie[static_cast<std::size_t>(trie[static_cast<std::size_t>(u)].fail)].child[l];
                if (c < 0)
                    trie[static_cast<std::size_t>(u)].child[l] = f;
                else {
                    trie[static_cast<std::size_t>(c)].fail = f;
                    queue.push_back(c);
                }
            }
        }
        // live automaton: transitions into terminal states die
        next_.assign(trie.size(), std::vector<int>(letters(), -1));
        for (std::size_t u = 0; u < trie.size(); ++u) {
            if (trie[u].terminal) continue;
            for (std::size_t l = 0; l < letters(); ++l) {
                int c = trie[u].child[l];
                next_[u][l] = trie[static_cast<std::size_t>(c)].terminal ? -1 : c;
            }
        }
        // extendable states: iteratively remove states with no live successor
        extendable_.assign(states(), true);
        for (std::size_t u = 0; u < trie.size(); ++u)
            if (trie[u].terminal) extendable_[u] = false;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t u = 0; u < states(); ++u) {
                if (!extendable_[u]) continue;
                bool has_successor = false;
                for (std::size_t l = 0; l < letters(); ++l) {
                    int c = next_[u][l];
                    if (c >= 0 && extendable_[static_cast<std::size_t>(c)]) {
                        has_successor = true;
                        break;
                    }
                }
                if (!has_successor) {
                    extendable_[u] = false;
                    changed = true;
                }
            }
        }
    }

    std::string alphabet_;
    std::vector<std::string> forbidden_;
    std::map<char, std::size_t> letter_index_;
    std::vector<std::vector<int>> next_;
    std::vector<bool> extendable_;
};

/// f(n) = number of words of length n in W; g(n) = |V_n|, the words of
/// length n with extensions of arbitrarily long length; cumulative sums of
/// f give the dimension of the span of words of length <= n in the
/// monomial model.
struct GrowthProfile {
    long horizon = 0;
    std::vector<Int> f;
    std::vector<Int> g;
    std::vector<Int> cumulative;
};

inline GrowthProfile growth(const FactorLanguage& lang, long horizon) {
    GrowthProfile p;
    p.horizon = horizon;
    std::vector<Int> dist(lang.states(), Int(0));
    dist[0] = 1;
    Int cum(0);
    for (long n = 0; n <= horizon; ++n) {
        Int fn(0), gn(0);
        for (std::size_t u = 0; u < lang.states(); ++u) {
            fn += dist[u];
            if (lang.extendable()[u]) gn += dist[u];
        }
        cum += fn;
        p.f.push_back(fn);
        p.g.push_back(gn);
        p.cumulative.push_back(cum);
        std::vector<Int> nxt(lang.states(), Int(0));
        for (std::size_t u = 0; u < lang.states(); ++u) {
            if (dist[u] == 0) continue;
            for (std::size_t l = 0; l < lang.letters(); ++l) {
                int c = lang.step(static_cast<int>(u), l);
                if (c >= 0) nxt[static_cast<std::size_t>(c)] += dist[u];
            }
        }
        dist.swap(nxt);
    }
    return p;
}

/// Words of length n whose end state can still reach a cycle (V_n), in
/// lexicographic order of the alphabet.
inline std::vector<std::string> enumerate_extendable(const FactorLanguage& lang, long n) {
    std::vector<std::string> out;
    std::string word;
    auto dfs = [&](auto&& self, int state, long depth) -> void {
        if (depth == n) {
            if (lang.extendable()[static_cast<std::size_t>(state)]) out.push_back(word);
            return;
        }
        for (std::size_t l = 0; l < lang.letters(); ++l) {
            int c = lang.step(state, l);
            if (c < 0) continue;
            word.push_back(lang.alphabet()[l]);
            self(self, c, depth + 1);
            word.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

/// All accepted words of length n (test oracle companion).
inline std::vector<std::string> enumerate_members(const FactorLanguage& lang, long n) {
    std::vector<std::string> out;
    std::string word;
    auto dfs = [&](auto&& self, int state, long depth) -> void {
        if (depth == n) {
            out.push_back(word);
            return;
        }
        for (std::size_t l = 0; l < lang.letters(); ++l) {
            int c = lang.step(state, l);
            if (c < 0) continue;
            word.push_back(lang.alphabet()[l]);
            self(self, c, depth + 1);
            word.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

struct PeriodicWordResult {
    enum class Status { FOUND, FINITE, HORIZON };
    Status status = Status::HORIZON;
    std::string u;
    long stabilization_index = -1;  // least i with g(i) = g(i+1)
    std::vector<int> cycle_states;  // automaton proof: states after u, u^2, ... close a cycle
    long verified_powers = 0;       // direct membership checks u^n in W
    GrowthProfile profile;
};

namespace detail {

inline bool deglex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// Follow the unique extension inside V from word w to total length len.
inline std::string extend_uniquely(const FactorLanguage& lang, std::string w, long len) {
    int state = lang.run(0, w);
    while (static_cast<long>(w.size()) < len) {
        int chosen = -1;
        std::size_t letter = 0;
        for (std::size_t l = 0; l < lang.letters(); ++l) {
            int c = lang.step(state, l);
            if (c >= 0 && lang.extendable()[static_cast<std::size_t>(c)]) {
                if (chosen >= 0) throw Error("internal: extension inside V is not unique");
                chosen = c;
                letter = l;
            }
        }
        if (chosen < 0) throw Error("internal: V-word has no extension");
        w.push_back(lang.alphabet()[letter]);
        state = chosen;
    }
    return w;
}

/// Proof that u^n stays accepted for every n: iterate the state map of u
/// from the start state; it must close a cycle without dying.
inline std::vector<int> cycle_proof(const FactorLanguage& lang, const std::string& u) {
    std::vector<int> seen;
    int state = 0;
    for (std::size_t step = 0; step <= lang.states() + 1; ++step) {
        state = lang.run(state, u);
        if (state < 0) throw Error("internal: periodic candidate dies in the automaton");
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == state) {
                seen.push_back(state);
                return seen;
            }
        seen.push_back(state);
    }
    throw Error("internal: state sequence failed to close a cycle");
}

}  // namespace detail

/// Constructive periodic-word extraction: find the least i with
/// g(i) = g(i+1), follow the unique-extension map through i(m+1) letters,
/// locate the repeated block and return the enclosed word u, which the
/// automaton cycle then proves infinitely repeatable.  Ties between valid
/// candidates go to the deglex-least.
inline PeriodicWordResult find_periodic_word(const FactorLanguage& lang, long horizon = 64) {
    PeriodicWordResult res;
    res.profile = growth(lang, horizon + 1);
    if (!lang.is_infinite()) {
        res.status = PeriodicWordResult::Status::FINITE;
        return res;
    }
    long i = -1;
    for (long n = 0; n <= horizon; ++n)
        if (res.profile.g[static_cast<std::size_t>(n)] == res.profile.g[static_cast<std::size_t>(n + 1)]) {
            i = n;
            break;
        }
    if (i < 0) {
        res.status = PeriodicWordResult::Status::HORIZON;
        return res;
    }
    res.stabilization_index = i;

    std::string best;
    if (i == 0) {
        // V_1 is a single letter whose powers exhaust V
        auto v1 = enumerate_extendable(lang, 1);
        if (v1.size() != 1) throw Error("internal: g(1) = 1 but V_1 is not a singleton");
        best = v1.front();
    } else {
        auto vi = enumerate_extendable(lang, i);
        const long m = static_cast<long>(vi.size());
        std::map<std::string, std::size_t> index;
        for (std::size_t idx = 0; idx < vi.size(); ++idx) index[vi[idx]] = idx;
        for (const auto& w : vi) {
            std::string v = detail::extend_uniquely(lang, w, i * (m + 1));
            // block decomposition: every i-block lies in V_i
            std::vector<std::size_t> blocks;
            for (long bpos = 0; bpos + i <= static_cast<long>(v.size()); bpos += i) {
                auto it = index.find(v.substr(static_cast<std::size_t>(bpos), static_cast<std::size_t>(i)));
                if (it == index.end()) throw Error("internal: block of a V-word escaped V_i");
                blocks.push_back(it->second);
            }
            std::map<std::size_t, std::size_t> first_seen;
            for (std::size_t pos = 0; pos < blocks.size(); ++pos) {
                auto it = first_seen.find(blocks[pos]);
                if (it != first_seen.end()) {
                    std::size_t a = it->second, b = pos;
                    std::string u = v.substr(a * static_cast<std::size_t>(i),
                                             (b - a) * static_cast<std::size_t>(i));
                    if (best.empty() || detail::deglex_less(u, best)) best = u;
                    break;
                }
                first_seen[blocks[pos]] = pos;
            }
        }
        if (best.empty()) throw Error("internal: no repeated block in the extension chain");
    }

    res.status = PeriodicWordResult::Status::FOUND;
    res.u = best;
    res.cycle_states = detail::cycle_proof(lang, best);
    std::string power;
    for (int n = 1; n <= 20; ++n) {
        power += best;
        if (!lang.member(power)) throw Error("internal: periodic word failed a direct power check");
    }
    res.verified_powers = 20;
    return res;
}

struct DichotomyResult {
    enum class Kind { PERIODIC, BINOMIAL_GROWTH, UNDETERMINED };
    Kind kind = Kind::UNDETERMINED;
    long witness_d = -1;  // least d with f(d) <= d when routed to the periodic arm
    PeriodicWordResult periodic;
    GrowthProfile profile;
    std::string note;
};

/// Gap dichotomy: if f(d) <= d for some d within the horizon the language
/// contains an infinitely repeatable word; otherwise cumulative growth
/// dominates (n+2 choose 2) termwise, which the profile verifies.
inline DichotomyResult gap_dichotomy(const FactorLanguage& lang, long horizon = 64) {
    DichotomyResult out;
    out.profile = growth(lang, horizon);
    long d = -1;
    for (long n = 1; n <= horizon; ++n)
        if (out.profile.f[static_cast<std::size_t>(n)] <= n) {
            d = n;
            break;
        }
    if (d >= 0) {
        out.witness_d = d;
        out.periodic = find_periodic_word(lang, horizon);
        if (out.periodic.status == PeriodicWordResult::Status::FOUND) {
            out.kind = DichotomyResult::Kind::PERIODIC;
        } else {
            out.kind = DichotomyResult::Kind::UNDETERMINED;
            out.note = out.periodic.status == PeriodicWordResult::Status::FINITE
                           ? "language is finite"
                           : "g never stabilized within the horizon";
        }
        return out;
    }
    for (long n = 0; n <= horizon; ++n) {
        Int binom = Int(n + 2) * Int(n + 1) / 2;
        if (out.profile.cumulative[static_cast<std::size_t>(n)] < binom)
            throw Error("internal: cumulative growth fell below the binomial bound");
    }
    out.kind = DichotomyResult::Kind::BINOMIAL_GROWTH;
    return out;
}

}  // namespace orefree
