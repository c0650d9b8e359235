#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "symchar/errors.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Multiset of the n(lambda) hook lengths of a partition, stored as
/// counts[h] = multiplicity of hook length h, h in [1, n].
struct HookHistogram {
    int n = 0;
    std::vector<std::int64_t> counts;  // index 0 unused

    /// H_t = number of hooks with length divisible by t.
    std::int64_t multiples_of(int t) const {
        std::int64_t total = 0;
        for (int h = t; h <= n; h += t) total += counts[static_cast<std::size_t>(h)];
        return total;
    }

    /// True iff H_t >= threshold; strides only until the threshold is hit,
    /// which is what the pair classifiers need (they compare H_t against a
    /// known P_t and never need the full count).
    bool multiples_at_least(int t, std::int64_t threshold) const {
        if (threshold <= 0) return true;
        std::int64_t total = 0;
        for (int h = t; h <= n; h += t) {
            total += counts[static_cast<std::size_t>(h)];
            if (total >= threshold) return true;
        }
        return false;
    }
};

/// All hook lengths via h(i,j) = lambda_i - j + lambda'_j - i + 1,
/// one conjugate materialization, O(n) total.
inline HookHistogram hook_histogram(const Partition& la) {
    HookHistogram hist;
    hist.n = la.n();
    hist.counts.assign(static_cast<std::size_t>(hist.n) + 1, 0);
    const auto& rows = la.parts();
    Partition conj = conjugate(la);
    const auto& cols = conj.parts();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 1; j <= rows[i]; ++j) {
            int h = rows[i] - j + cols[static_cast<std::size_t>(j - 1)] - static_cast<int>(i);
            ++hist.counts[static_cast<std::size_t>(h)];
        }
    return hist;
}

inline std::int64_t hooks_div(const HookHistogram& hist, int t) { return hist.multiples_of(t); }

/// H_t(lambda): number of boxes whose hook length is a multiple of t.
inline std::int64_t hooks_div(const Partition& la, int t) {
    if (t < 1) throw std::invalid_argument("hooks_div: t must be >= 1");
    return hook_histogram(la).multiples_of(t);
}

/// First-column hook lengths lambda_i + ell - i, stored strictly increasing.
/// The abacus encoding: lambda is recoverable, and the t-core test becomes
/// closure under subtracting t.
struct BetaSet {
    std::vector<int> betas;

    static BetaSet of(const Partition& la) {
        BetaSet b;
        int ell = la.length();
        b.betas.resize(static_cast<std::size_t>(ell));
        for (int i = 1; i <= ell; ++i)
            b.betas[static_cast<std::size_t>(ell - i)] = la.part(i - 1) + ell - i;
        return b;
    }

    Partition to_partition() const {
        int ell = static_cast<int>(betas.size());
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(ell));
        for (int i = ell - 1; i >= 0; --i) {
            int v = betas[static_cast<std::size_t>(i)] - i;
            if (v > 0) parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    bool contains(int v) const { return std::binary_search(betas.begin(), betas.end(), v); }
};

/// H_t from the beta set without touching individual boxes.
///
/// The hooks in the row with first-column hook beta are {beta - b : 0 <= b <
/// beta, b not a beta number}. Among b == beta (mod t) there are floor(beta/t)
/// values below beta, minus the beta numbers already seen in that residue
/// class.
inline std::int64_t beta_hooks_div(const Partition& la, int t) {
    if (t < 1) throw std::invalid_argument("beta_hooks_div: t must be >= 1");
    BetaSet b = BetaSet::of(la);
    std::vector<int> seen(static_cast<std::size_t>(t), 0);
    std::int64_t total = 0;
    for (int beta : b.betas) {
        int r = beta % t;
        total += beta / t - seen[static_cast<std::size_t>(r)];
        ++seen[static_cast<std::size_t>(r)];
    }
    return total;
}

/// t-core test: every beta number >= t must have beta - t in the set.
inline bool is_core(const BetaSet& b, int t) {
    for (int beta : b.betas)
        if (beta >= t && !b.contains(beta - t)) return false;
    return true;
}

/// True iff lambda has no hook length divisible by t.
inline bool is_core(const Partition& la, int t) {
    if (t < 1) throw std::invalid_argument("is_core: t must be >= 1");
    return is_core(BetaSet::of(la), t);
}

/// P_t(mu) = (1/t) * sum of the parts of mu divisible by t. The division is
/// exact by construction.
inline std::int64_t parts_div_sum(const Partition& mu, int t) {
    if (t < 1) throw std::invalid_argument("parts_div_sum: t must be >= 1");
    std::int64_t s = 0;
    for (int v : mu.parts())
        if (v % t == 0) s += v / t;
    return s;
}

/// Number of parts of mu that are multiples of t. Always <= P_t(mu).
inline std::int64_t parts_div_count(const Partition& mu, int t) {
    if (t < 1) throw std::invalid_argument("parts_div_count: t must be >= 1");
    std::int64_t c = 0;
    for (int v : mu.parts())
        if (v % t == 0) ++c;
    return c;
}

inline constexpr int kCoreCountEnumerationGuard = 45;

/// c_t(N) by exhaustive enumeration. Guarded: use the t-core generating
/// function beyond the enumeration bound.
inline BigInt core_count_exact(int N, int t) {
    if (N < 0) throw std::invalid_argument("core_count_exact: N must be >= 0");
    if (t < 1) throw std::invalid_argument("core_count_exact: t must be >= 1");
    if (N > kCoreCountEnumerationGuard)
        throw guard_error("core_count_exact: N exceeds enumeration guard of " +
                          std::to_string(kCoreCountEnumerationGuard));
    BigInt count = 0;
    for_each_partition(N, [&](const std::vector<int>& parts) {
        int ell = static_cast<int>(parts.size());
        BetaSet b;
        b.betas.resize(static_cast<std::size_t>(ell));
        for (int i = 1; i <= ell; ++i)
            b.betas[static_cast<std::size_t>(ell - i)] = parts[static_cast<std::size_t>(i - 1)] + ell - i;
        if (is_core(b, t)) ++count;
    });
    return count;
}

}  // namespace symchar
