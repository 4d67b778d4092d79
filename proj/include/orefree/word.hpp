#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orefree/skew.hpp"

namespace orefree {

/// Word over the two-letter alphabet {G1, G2}, compared in degree-
/// lexicographic order with G1 < G2.
struct Word {
    std::vector<std::uint8_t> letters;  // 0 = G1, 1 = G2

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    std::string str() const {
        std::string s;
        for (auto l : letters) s += (l == 0 ? "g1" : "g2");
        return s.empty() ? "1" : s;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters < b.letters;
    }

    Word prefix(std::size_t n) const {
        Word w;
        w.letters.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(n));
        return w;
    }
};

/// All 2^{L+1} - 2 nonempty words of length <= L in deglex order.
inline std::vector<Word> words_up_to(int L) {
    std::vector<Word> out;
    for (int len = 1; len <= L; ++len) {
        std::uint64_t count = 1ull << len;
        for (std::uint64_t code = 0; code < count; ++code) {
            Word w;
            w.letters.resize(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i)
                w.letters[static_cast<std::size_t>(i)] =
                    static_cast<std::uint8_t>((code >> (len - 1 - i)) & 1ull);
            out.push_back(std::move(w));
        }
    }
    return out;
}

/// Product of the generator series in word order, valid to order N; the
/// empty word is the identity.
template <class C>
SkewSeries<C> word_to_series(const Word& w, const SkewSeries<C>& g1, const SkewSeries<C>& g2, long N) {
    if (g1.window() < N || g2.window() < N) throw PrecisionError(N);
    auto acc = SkewSeries<C>::one(g1.sigma(), N);
    for (auto l : w.letters) acc = acc * (l == 0 ? g1 : g2);
    if (acc.window() < N) throw PrecisionError(N + (N - acc.window()));
    return acc.truncated(N);
}

}  // namespace orefree
