#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symchar/asymptotics.hpp"
#include "symchar/characters.hpp"
#include "symchar/errors.hpp"
#include "symchar/hooks.hpp"
#include "symchar/parallel.hpp"
#include "symchar/partition.hpp"
#include "symchar/series.hpp"

namespace symchar {

/// Zero-certificate flags for one pair (lambda, mu):
///   type_i    lambda is a mu_1-core
///   type_ii   lambda is a t-core for some part size t of mu
///   poly_flag some t >= 2 has more parts of mu divisible by t than hooks of
///             lambda divisible by t (the polynomial non-divisibility form)
///   type_iii  some t >= 2 has P_t(mu) > H_t(lambda) (Stanley's criterion)
/// The implications type_i => type_ii => poly_flag => type_iii hold per pair.
struct PairFlags {
    bool type_i = false;
    bool type_ii = false;
    bool type_iii = false;
    bool poly_flag = false;
    std::optional<int> witness_t;    // smallest Stanley witness
    std::optional<bool> is_zero;     // present iff the character was computed
};

namespace detail {

/// Scratch buffers for repeated pair classification at one fixed N. The
/// per-mu divisor profile is rebuilt with a stamp trick instead of clearing
/// N-sized arrays; the smallest-prime-factor sieve makes "all divisors of a
/// part" an O(d(part)) walk.
class ClassifyScratch {
public:
    explicit ClassifyScratch(int n) : n_(n) {
        spf_.resize(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 2; i <= n; ++i) {
            if (spf_[static_cast<std::size_t>(i)] == 0)
                for (int j = i; j <= n; j += i)
                    if (spf_[static_cast<std::size_t>(j)] == 0) spf_[static_cast<std::size_t>(j)] = i;
        }
        psum_.resize(static_cast<std::size_t>(n) + 1, 0);
        pcnt_.resize(static_cast<std::size_t>(n) + 1, 0);
        stamp_.resize(static_cast<std::size_t>(n) + 1, 0);
    }

    int n() const { return n_; }

    /// Rebuild P_t / part-count profile for mu; fills the sorted candidate
    /// list of t >= 2 with P_t > 0 (exactly the divisors of the parts).
    void load_mu(const Partition& mu) {
        ++epoch_;
        candidates_.clear();
        distinct_parts_.clear();
        divisor_scratch_.clear();
        int prev = -1;
        for (int v : mu.parts()) {
            if (v != prev) {
                distinct_parts_.push_back(v);
                prev = v;
            }
            divisors_of(v, divisor_scratch_);
            for (int t : divisor_scratch_) {
                if (stamp_[static_cast<std::size_t>(t)] != epoch_) {
                    stamp_[static_cast<std::size_t>(t)] = epoch_;
                    psum_[static_cast<std::size_t>(t)] = 0;
                    pcnt_[static_cast<std::size_t>(t)] = 0;
                    if (t >= 2) candidates_.push_back(t);
                }
                psum_[static_cast<std::size_t>(t)] += v / t;
                pcnt_[static_cast<std::size_t>(t)] += 1;
            }
            divisor_scratch_.clear();
        }
        std::sort(candidates_.begin(), candidates_.end());
    }

    const std::vector<int>& candidates() const { return candidates_; }
    const std::vector<int>& distinct_parts() const { return distinct_parts_; }
    std::int64_t psum(int t) const { return psum_[static_cast<std::size_t>(t)]; }
    std::int64_t pcnt(int t) const { return pcnt_[static_cast<std::size_t>(t)]; }

private:
    void divisors_of(int v, std::vector<int>& out) {
        out.push_back(1);
        int x = v;
        while (x > 1) {
            int p = spf_[static_cast<std::size_t>(x)];
            int e = 0;
            while (x % p == 0) {
                x /= p;
                ++e;
            }
            std::size_t base = out.size();
            int pe = 1;
            for (int k = 1; k <= e; ++k) {
                pe *= p;
                for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
            }
        }
    }

    int n_;
    std::vector<int> spf_;
    std::vector<std::int64_t> psum_, pcnt_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<int> candidates_, distinct_parts_, divisor_scratch_;
};

/// Flags for (lambda-as-histogram, currently loaded mu). The histogram's
/// early-exit strides keep each comparison O(min(H_t, P_t) * t-steps).
inline PairFlags classify_loaded(const HookHistogram& hist, const ClassifyScratch& scratch) {
    PairFlags flags;
    for (int t : scratch.distinct_parts()) {
        if (t < 2) continue;  // H_1 = N is never 0 for N >= 1
        if (!hist.multiples_at_least(t, 1)) {
            flags.type_ii = true;
            break;
        }
    }
    for (int t : scratch.candidates()) {
        if (!flags.type_iii && !hist.multiples_at_least(t, scratch.psum(t))) {
            flags.type_iii = true;
            flags.witness_t = t;
        }
        if (!flags.poly_flag && !hist.multiples_at_least(t, scratch.pcnt(t)))
            flags.poly_flag = true;
        if (flags.type_iii && flags.poly_flag) break;
    }
    return flags;
}

}  // namespace detail

/// Classify one pair. with_character additionally evaluates chi^lambda_mu
/// and reports whether it is zero.
inline PairFlags classify(const Partition& la, const Partition& mu, bool with_character = false) {
    if (la.n() != mu.n())
        throw size_mismatch_error("classify: |lambda| != |mu|");
    if (la.n() < 1) throw std::invalid_argument("classify: N must be >= 1");
    detail::ClassifyScratch scratch(la.n());
    scratch.load_mu(mu);
    HookHistogram hist = hook_histogram(la);
    PairFlags flags = detail::classify_loaded(hist, scratch);
    flags.type_i = !hist.multiples_at_least(mu.largest_part(), 1);
    if (flags.type_i) flags.type_ii = true;
    if (with_character) flags.is_zero = (character(la, mu) == 0);
    return flags;
}

/// Literal Stanley divisibility check over Z[x]: does
/// prod_i (1 - x^{mu_i}) divide prod_u (1 - x^{h(u)})?
/// Plain long division; the dividend degree is sum of all hook lengths,
/// so this is guarded at N <= 30 and exists as the independent oracle for
/// poly_flag (false here <=> poly_flag).
inline constexpr int kPolyDivideGuard = 30;

inline bool poly_divides_direct(const Partition& la, const Partition& mu) {
    if (la.n() != mu.n()) throw size_mismatch_error("poly_divides_direct: |lambda| != |mu|");
    if (la.n() > kPolyDivideGuard)
        throw guard_error("poly_divides_direct: N exceeds degree guard " +
                          std::to_string(kPolyDivideGuard));
    HookHistogram hist = hook_histogram(la);
    std::int64_t deg = 0;
    for (int h = 1; h <= hist.n; ++h) deg += static_cast<std::int64_t>(h) * hist.counts[static_cast<std::size_t>(h)];
    std::vector<BigInt> dividend(static_cast<std::size_t>(deg) + 1);
    dividend[0] = 1;
    std::int64_t used = 0;
    for (int h = 1; h <= hist.n; ++h)
        for (std::int64_t rep = 0; rep < hist.counts[static_cast<std::size_t>(h)]; ++rep) {
            used += h;
            for (std::int64_t i = used; i >= h; --i)
                dividend[static_cast<std::size_t>(i)] -= dividend[static_cast<std::size_t>(i - h)];
        }

    // divide by each (1 - x^m): quotient of exact division by (1 - x^m) is a
    // prefix-sum with stride m; division is exact iff the trailing m
    // "remainder" positions of the running sums vanish.
    std::int64_t cur_deg = deg;
    for (int m : mu.parts()) {
        // q(x) = f(x) / (1 - x^m): q_i = f_i + q_{i-m}
        for (std::int64_t i = m; i <= cur_deg; ++i)
            dividend[static_cast<std::size_t>(i)] += dividend[static_cast<std::size_t>(i - m)];
        // exact iff the top m coefficients of the running sums are zero
        bool exact = true;
        for (std::int64_t i = cur_deg - m + 1; i <= cur_deg; ++i)
            if (dividend[static_cast<std::size_t>(i)] != 0) exact = false;
        if (!exact) return false;
        cur_deg -= m;
    }
    return true;
}

/// Per-condition pair counts for the five-way decomposition of Stanley
/// pairs. `satisfying[c]` counts type-III pairs meeting condition c
/// (conditions overlap); `first_match[c]` attributes each pair to its first
/// matching condition in order (i)..(v); `all` is the union, which must equal
/// the type-III count.
struct ConditionCounts {
    std::array<BigInt, 5> satisfying{};
    std::array<BigInt, 5> first_match{};
    BigInt all = 0;
};

/// Exact zero census over all p(N)^2 pairs.
struct ZeroCensus {
    int n = 0;
    BigInt total_pairs = 0;
    BigInt z1 = 0;      // type I
    BigInt z2 = 0;      // type II
    BigInt z3 = 0;      // type III (Stanley)
    BigInt z_poly = 0;  // polynomial criterion
    std::optional<BigInt> z_total;  // zeros of the table; present iff characters were computed
    ConditionCounts conditions;
    double t1_clamped = 2.0;  // thresholds used for the condition split
    double t2_clamped = 2.0;  // (raw T1/T2 are negative at any census-able N)
};

inline constexpr int kCensusFlagsGuard = 28;
inline constexpr int kCensusCharactersGuard = 22;

namespace detail {

/// Condition membership for a type-III pair, in the order (i)..(v).
/// (ii) and (iv) depend on mu alone; the others consult lambda through the
/// precomputed core flags. Thresholds arrive already clamped.
struct ConditionInputs {
    double t1c, t2c;
};

inline std::array<bool, 5> conditions_of_pair(const Partition& mu, const ClassifyScratch& scratch,
                                              const HookHistogram& lambda_hist,
                                              const ConditionInputs& th) {
    std::array<bool, 5> cond{};
    int parts_above_t2 = 0;
    int distinct_above_t2 = 0;
    int unique_above_t2 = 0;  // the value, if exactly one part exceeds T2
    {
        int prev = -1;
        for (int v : mu.parts()) {
            if (static_cast<double>(v) <= th.t2c) break;
            ++parts_above_t2;
            if (v != prev) {
                ++distinct_above_t2;
                prev = v;
            }
            unique_above_t2 = v;
        }
    }
    for (int t : scratch.candidates()) {
        std::int64_t p = scratch.psum(t);
        double td = static_cast<double>(t);
        if (td <= th.t1c) {
            if (!cond[0] && !lambda_hist.multiples_at_least(t, p)) cond[0] = true;
        } else {
            if (p >= 2) cond[1] = true;
            if (td <= th.t2c && !cond[2] && p == 1 && !lambda_hist.multiples_at_least(t, 1))
                cond[2] = true;
        }
    }
    if (distinct_above_t2 >= 2) cond[3] = true;
    if (parts_above_t2 == 1 && !lambda_hist.multiples_at_least(unique_above_t2, 1)) cond[4] = true;
    return cond;
}

}  // namespace detail

/// Census over all pairs of partitions of N. Parallelizes over mu columns;
/// totals are order-independent sums, so output is identical for any worker
/// count. When with_characters is set, every pair's character is evaluated
/// (memoized per column), z_total is recorded, and Stanley soundness
/// (type_iii => chi = 0) is asserted for every pair.
inline ZeroCensus census(int N, bool with_characters, int workers = 0) {
    if (N < 1) throw std::invalid_argument("census: N must be >= 1");
    if (with_characters && N > kCensusCharactersGuard)
        throw guard_error("census: with_characters guard is N <= " +
                          std::to_string(kCensusCharactersGuard));
    if (N > kCensusFlagsGuard)
        throw guard_error("census: flags guard is N <= " + std::to_string(kCensusFlagsGuard));

    ZeroCensus out;
    out.n = N;
    BigInt pn = partition_count(N);
    out.total_pairs = pn * pn;

    detail::ConditionInputs th{2.0, 2.0};
    if (N >= 16) {
        Thresholds t = thresholds(N);
        th.t1c = t.t1_clamped;
        th.t2c = t.t2_clamped;
    }
    out.t1_clamped = th.t1c;
    out.t2_clamped = th.t2c;

    std::vector<Partition> order = enumerate_partitions(N);
    std::size_t dim = order.size();
    std::vector<HookHistogram> hists(dim);
    for (std::size_t i = 0; i < dim; ++i) hists[i] = hook_histogram(order[i]);

    struct ColumnTally {
        std::int64_t z1 = 0, z2 = 0, z3 = 0, z_poly = 0, z_total = 0;
        std::array<std::int64_t, 5> cond_any{};
        std::array<std::int64_t, 5> cond_first{};
        std::int64_t cond_union = 0;
    };
    std::vector<ColumnTally> tallies(dim);

    parallel_for(static_cast<std::int64_t>(dim), workers, [&](std::int64_t jj) {
        auto j = static_cast<std::size_t>(jj);
        const Partition& mu = order[j];
        detail::ClassifyScratch scratch(N);
        scratch.load_mu(mu);
        ColumnTally& tally = tallies[j];
        std::optional<ColumnEvaluator> col;
        if (with_characters) col.emplace(mu);
        for (std::size_t i = 0; i < dim; ++i) {
            const HookHistogram& hist = hists[i];
            PairFlags flags = detail::classify_loaded(hist, scratch);
            flags.type_i = !hist.multiples_at_least(mu.largest_part(), 1);
            if (flags.type_i) flags.type_ii = true;
            if (flags.type_i) ++tally.z1;
            if (flags.type_ii) ++tally.z2;
            if (flags.type_iii) ++tally.z3;
            if (flags.poly_flag) ++tally.z_poly;
            if (with_characters) {
                bool zero = (col->eval(order[i]) == 0);
                if (zero) ++tally.z_total;
                if (flags.type_iii && !zero)
                    throw verification_error("census: Stanley-flagged pair with nonzero character at N=" +
                                             std::to_string(N));
            }
            if (flags.type_iii) {
                auto cond = detail::conditions_of_pair(mu, scratch, hist, th);
                bool any = false;
                for (int c = 0; c < 5; ++c) {
                    if (cond[static_cast<std::size_t>(c)]) {
                        ++tally.cond_any[static_cast<std::size_t>(c)];
                        if (!any) ++tally.cond_first[static_cast<std::size_t>(c)];
                        any = true;
                    }
                }
                if (any) ++tally.cond_union;
            }
        }
    });

    for (const auto& tally : tallies) {
        out.z1 += tally.z1;
        out.z2 += tally.z2;
        out.z3 += tally.z3;
        out.z_poly += tally.z_poly;
        for (int c = 0; c < 5; ++c) {
            out.conditions.satisfying[static_cast<std::size_t>(c)] += tally.cond_any[static_cast<std::size_t>(c)];
            out.conditions.first_match[static_cast<std::size_t>(c)] += tally.cond_first[static_cast<std::size_t>(c)];
        }
        out.conditions.all += tally.cond_union;
    }
    if (with_characters) {
        BigInt total = 0;
        for (const auto& tally : tallies) total += tally.z_total;
        out.z_total = total;
    }
    return out;
}

inline constexpr int kZ1ExactGuard = 4000;

/// Exact Z_I(N) without touching pairs:
///   Z_I(N) = sum_t #{mu : mu_1 = t} * c_t(N),
/// with the largest-part counts from one rolling DP and each c_t(N) from the
/// sparse single-coefficient core-series path.
inline BigInt z1_exact(int N) {
    if (N < 1) throw std::invalid_argument("z1_exact: N must be >= 1");
    if (N > kZ1ExactGuard)
        throw guard_error("z1_exact: N exceeds guard " + std::to_string(kZ1ExactGuard));
    warm_partition_cache(N);
    std::vector<BigInt> by_largest = largest_part_counts(N);
    BigInt total = 0;
    for (int t = 1; t <= N; ++t) {
        if (by_largest[static_cast<std::size_t>(t)] == 0) continue;
        total += by_largest[static_cast<std::size_t>(t)] * core_count_series(t, N);
    }
    return total;
}

inline constexpr int kConditionBreakdownGuard = 22;

/// The five-way condition split on its own (flags-only census pass).
inline ConditionCounts condition_breakdown(int N, int workers = 0) {
    if (N > kConditionBreakdownGuard)
        throw guard_error("condition_breakdown: N exceeds guard " +
                          std::to_string(kConditionBreakdownGuard));
    return census(N, false, workers).conditions;
}

}  // namespace symchar
