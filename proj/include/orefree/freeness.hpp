#pragma once

#include <atomic>
#include <chrono>
#include <mutex>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orefree/matrix.hpp"
#include "orefree/word.hpp"

namespace orefree {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

struct PivotEvidence {
    std::size_t word_index;
    long exponent;
    std::size_t coeff_index;
};

struct IndependenceResult {
    bool independent = false;
    std::size_t rank = 0;
    std::vector<PivotEvidence> pivots;  // one per series when independent
    std::vector<Rational> relation;     // a vanishing combination when one was found
};

namespace detail {

/// Flatten coefficients into Q-columns, one column per series.  Each
/// exponent forms a column block: the block's coefficients are put over a
/// common denominator and the numerator coefficients are listed.  Blocks
/// are independent, which bounds coefficient growth; any valid flattening
/// preserves rank.
struct FlattenedColumns {
    std::vector<std::vector<Rational>> columns;   // [series][row]
    std::vector<std::pair<long, std::size_t>> row_pos;  // row -> (exponent, coeff index)
};

template <class C>
struct CoeffFlattener;

template <>
struct CoeffFlattener<RatFunc> {
    static void flatten(const std::vector<RatFunc>& vals, FlattenedColumns& out, long exponent) {
        PolyQ common(1);
        for (const auto& v : vals) common = lcm(common, v.den());
        std::vector<PolyQ> nums;
        nums.reserve(vals.size());
        int width = 0;
        for (const auto& v : vals) {
            PolyQ n = v.num() * PolyQ::exact_divide(common, v.den());
            width = std::max(width, n.degree() + 1);
            nums.push_back(std::move(n));
        }
        for (int k = 0; k < width; ++k) {
            out.row_pos.emplace_back(exponent, static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < vals.size(); ++i)
                out.columns[i].push_back(nums[i].coeff(static_cast<std::size_t>(k)));
        }
    }
};

/// The t-extension layer flattens blockwise over the t-degree.
template <>
struct CoeffFlattener<Polynomial<RatFunc>> {
    static void flatten(const std::vector<Polynomial<RatFunc>>& vals, FlattenedColumns& out,
                        long exponent) {
        int tdeg = -1;
        for (const auto& v : vals) tdeg = std::max(tdeg, v.degree());
        std::size_t base = 0;
        for (int d = 0; d <= tdeg; ++d) {
            std::vector<RatFunc> slice;
            slice.reserve(vals.size());
            for (const auto& v : vals) slice.push_back(v.coeff(static_cast<std::size_t>(d)));
            FlattenedColumns tmp;
            tmp.columns.resize(vals.size());
            CoeffFlattener<RatFunc>::flatten(slice, tmp, exponent);
            for (std::size_t i = 0; i < vals.size(); ++i)
                for (auto& q : tmp.columns[i]) out.columns[i].push_back(q);
            for (auto& [e, k] : tmp.row_pos) out.row_pos.emplace_back(e, base + k);
            base += tmp.row_pos.size();
        }
    }
};

template <class C>
FlattenedColumns flatten_series(const std::vector<SkewSeries<C>>& series, long N) {
    FlattenedColumns out;
    out.columns.resize(series.size());
    long lo = N + 1;
    for (const auto& s : series) {
        if (s.window() < N) throw Error("series precision mismatch: window < N");
        lo = std::min(lo, s.lowest());
    }
    for (long n = lo; n <= N; ++n) {
        std::vector<C> vals;
        vals.reserve(series.size());
        bool all_zero = true;
        for (const auto& s : series) {
            C v = s.coeff(n);
            if (!(v == C(0))) all_zero = false;
            vals.push_back(std::move(v));
        }
        if (all_zero) continue;
        CoeffFlattener<C>::flatten(vals, out, n);
    }
    return out;
}

/// Normalize to the integral primitive vector with positive first nonzero
/// entry; relation vectors become canonical that way.
inline void normalize_relation(std::vector<Rational>& v) {
    Int den_lcm = 1;
    for (const auto& q : v) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
    Int content = 0;
    for (auto& q : v) {
        q *= Rational(den_lcm);
        content = boost::multiprecision::gcd(content, numerator(q));
    }
    if (content > 1)
        for (auto& q : v) q /= Rational(content);
    for (const auto& q : v) {
        if (q == 0) continue;
        if (q < 0)
            for (auto& x : v) x = -x;
        break;
    }
}

}  // namespace detail

/// Exact k-linear independence of truncated series.  INDEPENDENT is a
/// proof: a vanishing combination of the exact elements would vanish in
/// every truncation.  A rank deficit only means "not determined at this
/// truncation", and the first vanishing column is reported as a candidate
/// relation for symbolic confirmation.
template <class C>
IndependenceResult independence_over_k(const std::vector<SkewSeries<C>>& series, long N) {
    auto flat = detail::flatten_series(series, N);
    const std::size_t rows = flat.row_pos.size(), S = series.size();
    IndependenceResult res;
    struct PivotColumn {
        std::size_t row;
        std::vector<Rational> col;
        std::vector<Rational> comb;
    };
    std::vector<PivotColumn> basis;
    for (std::size_t j = 0; j < S; ++j) {
        std::vector<Rational> v = flat.columns[j];
        std::vector<Rational> comb(S, Rational(0));
        comb[j] = Rational(1);
        for (const auto& p : basis) {
            Rational factor = v[p.row];
            if (factor == 0) continue;
            for (std::size_t r = 0; r < rows; ++r) v[r] -= factor * p.col[r];
            for (std::size_t i = 0; i < S; ++i) comb[i] -= factor * p.comb[i];
        }
        std::size_t pr = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (v[r] != 0) {
                pr = r;
                break;
            }
        if (pr == rows) {
            if (res.relation.empty()) {
                res.relation = comb;
                detail::normalize_relation(res.relation);
            }
            continue;
        }
        Rational inv = Rational(1) / v[pr];
        for (auto& x : v) x *= inv;
        for (auto& x : comb) x *= inv;
        res.pivots.push_back({j, flat.row_pos[pr].first, flat.row_pos[pr].second});
        basis.push_back({pr, std::move(v), std::move(comb)});
    }
    res.rank = basis.size();
    res.independent = res.rank == S;
    if (!res.independent) res.pivots.clear();
    return res;
}

/// {1, b, ..., b^m} independence probe.
template <class C>
IndependenceResult power_independence(const SkewSeries<C>& b, int m, long N) {
    std::vector<SkewSeries<C>> powers;
    powers.push_back(SkewSeries<C>::one(b.sigma(), std::max(N, b.window())));
    for (int k = 1; k <= m; ++k) {
        auto next = powers.back() * b;
        if (next.window() < N) throw PrecisionError(N + (N - next.window()));
        powers.push_back(std::move(next));
    }
    return independence_over_k(powers, N);
}

/// b(t) = u + t v with t a fresh central indeterminate over the series
/// coefficients.
inline SkewSeries<Polynomial<RatFunc>> combine_witnesses(const Series& u, const Series& v) {
    if (!(u.sigma() == v.sigma())) throw SigmaMismatch();
    long lo = std::min(u.lowest(), v.lowest());
    long hi = std::min(u.window(), v.window());
    std::vector<Polynomial<RatFunc>> cs;
    for (long n = lo; n <= hi; ++n)
        cs.push_back(Polynomial<RatFunc>(std::vector<RatFunc>{u.coeff(n), v.coeff(n)}));
    return SkewSeries<Polynomial<RatFunc>>(u.sigma(), lo, hi, std::move(cs));
}

struct ProbeResult {
    bool found = false;
    std::vector<RatFunc> relation;  // r_0..r_p when found
};

/// Search for r_0..r_p in Q(s), not all zero, with
/// sum_j r_j sigma^j(b^n) = 0 for n in [n_lo, n_hi]; a candidate is
/// reported only if it also checks on the disjoint window of the next
/// p + 2 exponents.
inline ProbeResult shifted_power_probe(const Series& b, const SigmaSpec& sigma, int p, long n_lo,
                                       long n_hi) {
    if (!(sigma == b.sigma())) throw SigmaMismatch();
    if (n_lo < 0 || n_hi < n_lo) throw Error("probe window must satisfy 0 <= n_lo <= n_hi");
    long verify_hi = n_hi + p + 2;
    std::vector<Series> powers;
    powers.push_back(Series::one(sigma, b.window()));
    for (long n = 1; n <= verify_hi; ++n) powers.push_back(powers.back() * b);

    auto rows_for = [&](long n) {
        std::vector<std::vector<RatFunc>> rows;
        const Series& bn = powers[static_cast<std::size_t>(n)];
        for (long k = bn.lowest(); k <= bn.window(); ++k) {
            std::vector<RatFunc> row;
            row.reserve(static_cast<std::size_t>(p) + 1);
            bool nonzero = false;
            for (int j = 0; j <= p; ++j) {
                RatFunc e = sigma_apply(bn.coeff(k), sigma, j);
                if (!e.is_zero()) nonzero = true;
                row.push_back(std::move(e));
            }
            if (nonzero) rows.push_back(std::move(row));
        }
        return rows;
    };

    std::vector<std::vector<RatFunc>> sys;
    for (long n = n_lo; n <= n_hi; ++n)
        for (auto& r : rows_for(n)) sys.push_back(std::move(r));
    Matrix<RatFunc> M(sys.size(), static_cast<std::size_t>(p) + 1);
    for (std::size_t r = 0; r < sys.size(); ++r)
        for (std::size_t c = 0; c <= static_cast<std::size_t>(p); ++c) M.at(r, c) = sys[r][c];

    ProbeResult out;
    for (auto& cand : M.nullspace()) {
        bool ok = true;
        for (long n = n_hi + 1; n <= verify_hi && ok; ++n)
            for (auto& row : rows_for(n)) {
                RatFunc acc(0);
                for (std::size_t j = 0; j < cand.size(); ++j) acc += cand[j] * row[j];
                if (!acc.is_zero()) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        // scale so the first nonzero coefficient is 1
        RatFunc lead(0);
        for (const auto& c : cand)
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        for (auto& c : cand) c /= lead;
        out.found = true;
        out.relation = std::move(cand);
        break;
    }
    return out;
}

/// Generator of the certification problem, in the fraction shape
/// num * den^{-1} with den a unit at order 0 after normalization.
struct GeneratorFraction {
    SkewPoly num;
    SkewPoly den;

    Series expand(long N) const { return expand_right_fraction(num, den, N); }
};

struct CertifyPolicy {
    long N0 = 0;          // 0 means the default 4*L
    int max_doublings = 2;
    unsigned threads = 0;  // 0 means hardware concurrency
};

struct EscalationStep {
    long N;
    std::string outcome;
};

struct FreenessCertificate {
    enum class Verdict { INDEPENDENT, DEPENDENT, INCONCLUSIVE };

    explicit FreenessCertificate(SigmaSpec s) : sigma(std::move(s)) {}

    std::string instance;
    SigmaSpec sigma;
    std::string g1_text, g2_text;
    int L = 0;
    long N = 0;  // truncation order of the final decision
    std::vector<Word> words;
    Verdict verdict = Verdict::INCONCLUSIVE;
    std::vector<Rational> relation;
    std::vector<PivotEvidence> pivots;
    std::vector<EscalationStep> trace;
    double expand_ms = 0.0;
    double rank_ms = 0.0;
};

inline const char* verdict_name(FreenessCertificate::Verdict v) {
    switch (v) {
        case FreenessCertificate::Verdict::INDEPENDENT: return "INDEPENDENT";
        case FreenessCertificate::Verdict::DEPENDENT: return "DEPENDENT";
        default: return "INCONCLUSIVE";
    }
}

/// Expand every nonempty word of length <= L at order N, in deglex order.
/// Each word is one product away from its parent prefix, and layers
/// parallelize across words (read-only generator data).
inline std::vector<Series> expand_words(const GeneratorFraction& g1, const GeneratorFraction& g2,
                                        int L, long N, unsigned threads) {
    std::vector<Series> gens{g1.expand(N), g2.expand(N)};
    std::vector<Series> out;
    out.reserve((std::size_t(2) << L) - 2);
    std::vector<Series> layer = gens;
    out.insert(out.end(), layer.begin(), layer.end());
    for (int len = 2; len <= L; ++len) {
        std::size_t count = std::size_t(1) << len;
        std::vector<std::optional<Series>> next(count);
        parallel_for(count, threads, [&](std::size_t code) {
            const Series& parent = layer[code >> 1];
            const Series& gen = gens[code & 1];
            auto prod = parent * gen;
            if (prod.window() < N) throw PrecisionError(N + (N - prod.window()));
            next[code] = prod.truncated(N);
        });
        layer.clear();
        for (auto& s : next) layer.push_back(std::move(*s));
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// Freeness certification for the words of length <= L in two
/// generators.  Exact rank at truncation N proves independence; a rank
/// deficit yields a candidate relation which is only believed after it
/// recombines to zero at order 2N from a fresh generator expansion,
/// otherwise N escalates per policy until the verdict is INCONCLUSIVE.
inline FreenessCertificate certify_free(const GeneratorFraction& g1, const GeneratorFraction& g2,
                                        int L, const CertifyPolicy& policy = {},
                                        const std::string& instance_name = "") {
    using clock = std::chrono::steady_clock;
    if (L < 1) throw Error("certify_free requires L >= 1");
    if (!(g1.num.sigma() == g2.num.sigma())) throw SigmaMismatch();
    FreenessCertificate cert(g1.num.sigma());
    cert.instance = instance_name;
    cert.L = L;
    cert.words = words_up_to(L);

    long N = policy.N0 > 0 ? policy.N0 : 4L * L;
    for (int attempt = 0;; ++attempt) {
        auto t0 = clock::now();
        auto series = expand_words(g1, g2, L, N, policy.threads);
        auto t1 = clock::now();
        auto res = independence_over_k(series, N);
        auto t2 = clock::now();
        cert.expand_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        cert.rank_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();

        if (res.independent) {
            cert.verdict = FreenessCertificate::Verdict::INDEPENDENT;
            cert.N = N;
            cert.pivots = std::move(res.pivots);
            cert.trace.push_back({N, "independent: rank " + std::to_string(res.rank)});
            return cert;
        }

        // symbolic confirmation of the candidate at order 2N
        bool confirmed = false;
        if (!res.relation.empty()) {
            long N2 = 2 * N;
            auto t3 = clock::now();
            auto series2 = expand_words(g1, g2, L, N2, policy.threads);
            Series acc = Series::zero_to(cert.sigma, N2);
            for (std::size_t i = 0; i < series2.size(); ++i) {
                if (res.relation[i] == 0) continue;
                acc = acc + SkewSeries<RatFunc>::from_constant(cert.sigma, RatFunc(res.relation[i]), N2) *
                                series2[i];
            }
            confirmed = acc.is_zero_to_window();
            cert.expand_ms += std::chrono::duration<double, std::milli>(clock::now() - t3).count();
            if (confirmed) {
                cert.verdict = FreenessCertificate::Verdict::DEPENDENT;
                cert.N = N;
                cert.relation = std::move(res.relation);
                cert.trace.push_back(
                    {N, "dependence of rank " + std::to_string(res.rank) + " confirmed at order " +
                            std::to_string(N2)});
                return cert;
            }
            cert.trace.push_back({N, "rank " + std::to_string(res.rank) +
                                         ", candidate relation failed confirmation at order " +
                                         std::to_string(N2)});
        } else {
            cert.trace.push_back({N, "rank " + std::to_string(res.rank) + ", no candidate relation"});
        }

        if (attempt >= policy.max_doublings) {
            cert.verdict = FreenessCertificate::Verdict::INCONCLUSIVE;
            cert.N = N;
            return cert;
        }
        N *= 2;
    }
}

}  // namespace orefree
