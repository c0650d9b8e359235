#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symchar/errors.hpp"
#include "symchar/hooks.hpp"
#include "symchar/parallel.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// A removable border strip: its length, its height (rows spanned minus one),
/// and the partition left after removal.
struct RimHook {
    int length = 0;
    int height = 0;
    Partition remainder;
};

namespace detail {

inline std::vector<int> beta_ascending(const std::vector<int>& parts) {
    int ell = static_cast<int>(parts.size());
    std::vector<int> betas(static_cast<std::size_t>(ell));
    for (int i = 1; i <= ell; ++i)
        betas[static_cast<std::size_t>(ell - i)] = parts[static_cast<std::size_t>(i - 1)] + ell - i;
    return betas;
}

inline std::vector<int> partition_from_beta_desc(std::vector<int> betas) {
    // betas arbitrary distinct >= 0; sort descending, strip trailing zeros
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int ell = static_cast<int>(betas.size());
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        int v = betas[static_cast<std::size_t>(i)] - (ell - 1 - i);
        if (v > 0) parts.push_back(v);
    }
    return parts;
}

/// Border strips of length t in abacus terms: a beta number b with b - t not
/// in the set; removal replaces b by b - t, and the height is the number of
/// beta numbers strictly between them.
template <typename F>
void for_each_strip(const std::vector<int>& parts, int t, F&& fn) {
    std::vector<int> betas = beta_ascending(parts);
    for (std::size_t idx = 0; idx < betas.size(); ++idx) {
        int b = betas[idx];
        if (b < t) continue;
        if (std::binary_search(betas.begin(), betas.end(), b - t)) continue;
        auto first_above = std::upper_bound(betas.begin(), betas.end(), b - t);
        int height = static_cast<int>((betas.begin() + static_cast<std::ptrdiff_t>(idx)) - first_above);
        std::vector<int> next = betas;
        next[idx] = b - t;
        fn(partition_from_beta_desc(std::move(next)), height);
    }
}

}  // namespace detail

/// All border strips of length exactly t removable from lambda. Empty iff
/// lambda is a t-core (for t <= n); strips of length t biject with boxes of
/// hook length t.
inline std::vector<RimHook> rim_hooks(const Partition& la, int t) {
    if (t < 1) throw std::invalid_argument("rim_hooks: t must be >= 1");
    std::vector<RimHook> out;
    detail::for_each_strip(la.parts(), t, [&](std::vector<int> rem, int height) {
        out.push_back(RimHook{t, height, Partition(std::move(rem))});
    });
    return out;
}

/// Murnaghan-Nakayama evaluator for one fixed column mu. Strips the parts of
/// mu largest-first; the memo is keyed on (remaining lambda, number of parts
/// consumed) and is shared across all rows of the column, which is where the
/// speedup for full tables comes from.
class ColumnEvaluator {
public:
    explicit ColumnEvaluator(const Partition& mu) : mu_(mu.parts()), n_(mu.n()) {}

    BigInt eval(const Partition& la) {
        if (la.n() != n_)
            throw size_mismatch_error("character: |lambda| = " + std::to_string(la.n()) +
                                      " but |mu| = " + std::to_string(n_));
        return eval_impl(la.parts(), 0);
    }

private:
    BigInt eval_impl(const std::vector<int>& parts, int depth) {
        if (depth == static_cast<int>(mu_.size())) return 1;  // chi^{empty}_{empty} = 1
        std::string key = encode(parts, depth);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        detail::for_each_strip(parts, mu_[static_cast<std::size_t>(depth)],
                               [&](std::vector<int> rem, int height) {
                                   BigInt sub = eval_impl(rem, depth + 1);
                                   if (height % 2 == 0)
                                       total += sub;
                                   else
                                       total -= sub;
                               });
        memo_.emplace(std::move(key), total);
        return total;
    }

    static std::string encode(const std::vector<int>& parts, int depth) {
        std::string key;
        key.reserve(parts.size() + 1);
        key.push_back(static_cast<char>(depth));
        for (int v : parts) key.push_back(static_cast<char>(v));
        return key;
    }

    std::vector<int> mu_;
    int n_;
    std::unordered_map<std::string, BigInt> memo_;
};

/// chi^lambda_mu, exact. Requires |lambda| = |mu|.
inline BigInt character(const Partition& la, const Partition& mu) {
    ColumnEvaluator col(mu);
    return col.eval(la);
}

inline constexpr int kFullTableGuard = 26;

/// Exact character table of S_n in canonical (reverse-lexicographic) order:
/// values[i][j] = chi^{lambda_i}_{mu_j}.
struct CharTable {
    int n = 0;
    std::vector<Partition> order;
    std::vector<std::vector<BigInt>> values;
};

/// Builds the full table, parallelizing over columns. Output is positional,
/// so it is identical for any worker count.
inline CharTable full_table(int n, int workers = 0, int n_guard = kFullTableGuard) {
    if (n < 0) throw std::invalid_argument("full_table: n must be >= 0");
    if (n > n_guard)
        throw guard_error("full_table: n = " + std::to_string(n) + " exceeds guard " +
                          std::to_string(n_guard));
    CharTable table;
    table.n = n;
    table.order = enumerate_partitions(n);
    std::size_t dim = table.order.size();
    table.values.assign(dim, std::vector<BigInt>(dim));
    parallel_for(static_cast<std::int64_t>(dim), workers, [&](std::int64_t j) {
        ColumnEvaluator col(table.order[static_cast<std::size_t>(j)]);
        for (std::size_t i = 0; i < dim; ++i)
            table.values[i][static_cast<std::size_t>(j)] = col.eval(table.order[i]);
    });
    return table;
}

/// z_mu = prod_k k^{m_k} m_k!, the centralizer order of cycle type mu.
inline BigInt centralizer_size(const Partition& mu) {
    BigInt z = 1;
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        auto mult = static_cast<unsigned long>(j - i);
        BigInt kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), mult);
        z *= kpow * fact;
        i = j;
    }
    return z;
}

}  // namespace symchar
