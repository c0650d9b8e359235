#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symchar/errors.hpp"

namespace symchar {

/// Exact arbitrary-precision integer; used for every count that can
/// outgrow 64 bits (p(N), c_t(N), census totals, character values).
using BigInt = mpz_class;

/// A partition of a nonnegative integer: weakly decreasing positive parts.
/// Immutable after construction, cheap to copy, safe to share across threads.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
            n_ += parts_[i];
        }
    }

    /// Weight n = sum of parts. 0 for the empty partition.
    int n() const { return n_; }
    /// Number of parts ell(lambda).
    int length() const { return static_cast<int>(parts_.size()); }
    /// Largest part; 0 for the empty partition.
    int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the part vectors; canonical enumeration order is
    /// strictly decreasing under this comparison.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    /// "3,1" for (3,1); empty string for the empty partition.
    std::string label() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Visit every partition of n exactly once in reverse-lexicographic order:
/// (n) first, (1^n) last. The callback receives the current part vector as
/// scratch storage; it must not retain the reference.
template <typename F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) return;
    std::vector<int> a;
    if (n == 0) {
        visit(static_cast<const std::vector<int>&>(a));
        return;
    }
    a.push_back(n);
    for (;;) {
        visit(static_cast<const std::vector<int>&>(a));
        // rightmost part > 1; everything after it is a run of 1s
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[i] == 1) --i;
        if (i < 0) break;
        int rem = a[i] + static_cast<int>(a.size()) - 1 - i;
        int m = a[i] - 1;
        a.resize(static_cast<std::size_t>(i));
        while (rem >= m) {
            a.push_back(m);
            rem -= m;
        }
        if (rem > 0) a.push_back(rem);
    }
}

inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

namespace detail {

/// Cache of p(0..N) filled by the pentagonal-number recurrence
///   p(n) = sum_{k>=1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
/// Internally synchronized; callers may hit it from any thread.
class PartitionCounter {
public:
    BigInt count(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        extend(n);
        return cache_[static_cast<std::size_t>(n)];
    }

    void warm(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        extend(n);
    }

private:
    void extend(int n) {
        if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
        while (static_cast<int>(cache_.size()) <= n) {
            int m = static_cast<int>(cache_.size());
            BigInt s = 0;
            for (int k = 1;; ++k) {
                long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
                long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
                if (g1 > m) break;
                if (k % 2 == 1) {
                    s += cache_[static_cast<std::size_t>(m - g1)];
                    if (g2 <= m) s += cache_[static_cast<std::size_t>(m - g2)];
                } else {
                    s -= cache_[static_cast<std::size_t>(m - g1)];
                    if (g2 <= m) s -= cache_[static_cast<std::size_t>(m - g2)];
                }
            }
            cache_.push_back(std::move(s));
        }
    }

    std::mutex mutex_;
    std::vector<BigInt> cache_{BigInt(1)};
};

inline PartitionCounter& partition_counter() {
    static PartitionCounter counter;
    return counter;
}

}  // namespace detail

/// p(n), exact. Results for all m <= n stay cached.
inline BigInt partition_count(int n) { return detail::partition_counter().count(n); }

inline void warm_partition_cache(int n) { detail::partition_counter().warm(n); }

/// Number of partitions of n with every part <= k.
/// Standard knapsack recurrence B(n,k) = B(n,k-1) + B(n-k,k).
inline BigInt bounded_count(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("bounded_count: arguments must be >= 0");
    if (n == 0) return 1;
    std::vector<BigInt> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int j = 1; j <= std::min(k, n); ++j)
        for (int i = j; i <= n; ++i) b[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i - j)];
    return b[static_cast<std::size_t>(n)];
}

/// d[t] = #{mu |- N : largest part of mu is t} = bounded_count(N-t, t),
/// for t = 0..N, computed in one rolling pass. d[0] is 1 only for N = 0.
inline std::vector<BigInt> largest_part_counts(int N) {
    if (N < 0) throw std::invalid_argument("largest_part_counts: N must be >= 0");
    std::vector<BigInt> d(static_cast<std::size_t>(N) + 1);
    d[0] = (N == 0) ? 1 : 0;
    std::vector<BigInt> b(static_cast<std::size_t>(N) + 1);
    b[0] = 1;
    for (int k = 1; k <= N; ++k) {
        for (int i = k; i <= N; ++i) b[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i - k)];
        d[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(N - k)];
    }
    return d;
}

/// Transpose of the Young diagram. An involution.
inline Partition conjugate(const Partition& la) {
    const auto& p = la.parts();
    if (p.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(p.front()));
    for (int j = 1; j <= p.front(); ++j) {
        int count = 0;
        for (int v : p) {
            if (v >= j) ++count;
            else break;
        }
        conj[static_cast<std::size_t>(j - 1)] = count;
    }
    return Partition(std::move(conj));
}

}  // namespace symchar
