#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <vector>

#include "symchar/classify.hpp"
#include "symchar/errors.hpp"
#include "symchar/parallel.hpp"
#include "symchar/partition.hpp"
#include "symchar/rng.hpp"

namespace symchar {

/// Exactly uniform sampler for partitions of N by Boltzmann rejection at the
/// saddle parameter q = exp(-pi/sqrt(6N)).
///
/// Part multiplicities Z_k are independent geometrics, P(Z_k = j) =
/// (1-q^k) q^{kj}; a draw is accepted iff sum k Z_k = N, which conditions the
/// product measure to the uniform distribution on partitions of N. Expected
/// trials per acceptance are ~ 2 * 6^{1/4} N^{3/4}.
///
/// Small k (q^k > 1/2) are drawn directly by inverse transform. For the long
/// sparse tail the occupied sites are located by skip sampling: site k
/// carries mass nu_k = -log(1 - q^k), a unit-rate exponential walk over the
/// cumulative masses visits exactly the sites with Z_k >= 1 (each with
/// probability q^k, independently), and a landing beyond the mass of sites
/// <= N means some part > N was drawn, which forces rejection.
class PartitionSampler {
public:
    explicit PartitionSampler(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("PartitionSampler: N must be >= 1");
        log_q_ = -M_PI / std::sqrt(6.0 * n);
        q_pow_.resize(static_cast<std::size_t>(n) + 1, 0.0);
        inv_k_log_q_.resize(static_cast<std::size_t>(n) + 1, 0.0);
        q_pow_[0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            q_pow_[static_cast<std::size_t>(k)] = std::exp(static_cast<double>(k) * log_q_);
            inv_k_log_q_[static_cast<std::size_t>(k)] = 1.0 / (static_cast<double>(k) * log_q_);
        }
        direct_end_ = 0;
        while (direct_end_ < n && q_pow_[static_cast<std::size_t>(direct_end_ + 1)] > 0.5)
            ++direct_end_;
        double acc = 0.0;
        for (int k = direct_end_ + 1; k <= n; ++k) {
            acc += -std::log1p(-q_pow_[static_cast<std::size_t>(k)]);
            cum_mass_.push_back(acc);
        }
        mass_end_ = acc;
        // tail mass over k > N: sum_l q^{(N+1)l} / (l (1 - q^l)), exact in
        // the series sense, astronomically small for large N but kept so the
        // conditional law is uniform at every N
        double tail = 0.0;
        for (int l = 1; l <= 512; ++l) {
            double ql = std::exp(static_cast<double>(l) * log_q_);
            double term = std::exp(static_cast<double>(n + 1) * l * log_q_) /
                          (static_cast<double>(l) * (1.0 - ql));
            tail += term;
            if (term < 1e-300) break;
        }
        mass_total_ = mass_end_ + tail;
    }

    int n() const { return n_; }

    /// One accepted sample; trials_accum is incremented once per rejection
    /// trial (including the accepted one).
    Partition sample(CounterRng& rng, std::uint64_t& trials_accum) const {
        std::vector<std::pair<int, long long>> occupied;
        occupied.reserve(64);
        for (;;) {
            ++trials_accum;
            occupied.clear();
            long long total = 0;
            bool dead = false;
            for (int k = 1; k <= direct_end_; ++k) {
                double u = rng.next_unit();
                double qk = q_pow_[static_cast<std::size_t>(k)];
                if (u >= qk) continue;
                auto z = static_cast<long long>(std::log(u) * inv_k_log_q_[static_cast<std::size_t>(k)]);
                if (z < 1) z = 1;
                total += static_cast<long long>(k) * z;
                if (total > n_) {
                    dead = true;
                    break;
                }
                occupied.emplace_back(k, z);
            }
            if (dead) continue;
            double pos = 0.0;
            std::size_t hint = 0;  // occupied sites arrive in ascending order
            for (;;) {
                pos += -std::log(rng.next_unit());
                if (!(pos < mass_end_)) {
                    if (pos <= mass_total_) dead = true;  // a part > N appeared
                    break;
                }
                std::size_t idx = gallop_upper(pos, hint);
                hint = idx + 1;
                int k = direct_end_ + 1 + static_cast<int>(idx);
                double u = rng.next_unit();
                double qk = q_pow_[static_cast<std::size_t>(k)];
                long long z = 1;
                if (u < qk) {
                    auto extra = static_cast<long long>(std::log(u) * inv_k_log_q_[static_cast<std::size_t>(k)]);
                    if (extra < 1) extra = 1;
                    z += extra;
                }
                total += static_cast<long long>(k) * z;
                if (total > n_) {
                    dead = true;
                    break;
                }
                occupied.emplace_back(k, z);
                pos = cum_mass_[idx];  // discard leftover mass inside site k
            }
            if (dead || total != n_) continue;
            std::vector<int> parts;
            parts.reserve(occupied.size() * 2);
            for (auto it = occupied.rbegin(); it != occupied.rend(); ++it)
                for (long long c = 0; c < it->second; ++c) parts.push_back(it->first);
            return Partition(std::move(parts));
        }
    }

    Partition sample(SeedSpec seed) const {
        CounterRng rng(seed);
        std::uint64_t trials = 0;
        return sample(rng, trials);
    }

private:
    /// First index >= from with cum_mass_ > pos, by exponential search from
    /// `from`. Successive queries move right in short hops, so this touches
    /// warm cache instead of bisecting the whole tail every time.
    std::size_t gallop_upper(double pos, std::size_t from) const {
        std::size_t n = cum_mass_.size();
        std::size_t low = from;    // everything below `low` is known <= pos
        std::size_t probe = from;
        std::size_t step = 1;
        while (probe < n && cum_mass_[probe] <= pos) {
            low = probe + 1;       // monotone, so all indices <= probe are <= pos
            probe += step;
            step <<= 1;
        }
        std::size_t high = std::min(probe, n);
        return static_cast<std::size_t>(
            std::upper_bound(cum_mass_.begin() + static_cast<std::ptrdiff_t>(low),
                             cum_mass_.begin() + static_cast<std::ptrdiff_t>(high), pos) -
            cum_mass_.begin());
    }

    int n_;
    double log_q_;
    int direct_end_;
    std::vector<double> q_pow_;
    std::vector<double> inv_k_log_q_;
    std::vector<double> cum_mass_;  // cumulative nu over sites direct_end_+1 .. N
    double mass_end_ = 0.0;
    double mass_total_ = 0.0;
};

/// Uniform random partition of N for one seed; convenience wrapper.
inline Partition sample_partition(int n, SeedSpec seed) {
    return PartitionSampler(n).sample(seed);
}

/// A Monte Carlo proportion with its binomial standard error.
struct SampleEstimate {
    double proportion = 0.0;
    double stderr_ = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t n_trials = 0;  // rejection trials consumed (all draws)
};

struct ZeroTypeEstimates {
    int n = 0;
    std::int64_t n_samples = 0;
    std::uint64_t n_trials = 0;
    SeedSpec seed;
    SampleEstimate type_i, type_ii, type_iii, poly;
};

/// Estimates the type-I/II/III/poly proportions over independent uniform
/// pairs (lambda, mu). Pair i draws lambda from stream seed.stream_index+2i
/// and mu from the next stream, so results are identical for any worker
/// count. Counters merge by commutative integer sums.
inline ZeroTypeEstimates estimate_zero_types(int n, std::int64_t n_samples, SeedSpec seed,
                                             int workers = 0) {
    if (n < 2) throw std::invalid_argument("estimate_zero_types: N must be >= 2");
    if (n_samples < 1) throw std::invalid_argument("estimate_zero_types: need n_samples >= 1");
    PartitionSampler sampler(n);
    std::atomic<std::int64_t> c1{0}, c2{0}, c3{0}, cp{0};
    std::atomic<std::uint64_t> trials{0};

    int nworkers = resolve_workers(workers);
    parallel_for(static_cast<std::int64_t>(nworkers), nworkers, [&](std::int64_t w) {
        detail::ClassifyScratch scratch(n);
        std::int64_t l1 = 0, l2 = 0, l3 = 0, lp = 0;
        std::uint64_t lt = 0;
        for (std::int64_t i = w; i < n_samples; i += nworkers) {
            CounterRng rng_la({seed.master_seed, seed.stream_index + 2 * static_cast<std::uint64_t>(i)});
            CounterRng rng_mu({seed.master_seed, seed.stream_index + 2 * static_cast<std::uint64_t>(i) + 1});
            Partition la = sampler.sample(rng_la, lt);
            Partition mu = sampler.sample(rng_mu, lt);
            scratch.load_mu(mu);
            HookHistogram hist = hook_histogram(la);
            PairFlags flags = detail::classify_loaded(hist, scratch);
            flags.type_i = !hist.multiples_at_least(mu.largest_part(), 1);
            if (flags.type_i) flags.type_ii = true;
            if (flags.type_i) ++l1;
            if (flags.type_ii) ++l2;
            if (flags.type_iii) ++l3;
            if (flags.poly_flag) ++lp;
        }
        c1 += l1;
        c2 += l2;
        c3 += l3;
        cp += lp;
        trials += lt;
    });

    auto make = [&](std::int64_t count) {
        SampleEstimate e;
        e.n_samples = n_samples;
        e.n_trials = trials.load();
        e.proportion = static_cast<double>(count) / static_cast<double>(n_samples);
        e.stderr_ = std::sqrt(e.proportion * (1.0 - e.proportion) / static_cast<double>(n_samples));
        return e;
    };
    ZeroTypeEstimates out;
    out.n = n;
    out.n_samples = n_samples;
    out.n_trials = trials.load();
    out.seed = seed;
    out.type_i = make(c1.load());
    out.type_ii = make(c2.load());
    out.type_iii = make(c3.load());
    out.poly = make(cp.load());
    return out;
}

}  // namespace symchar
