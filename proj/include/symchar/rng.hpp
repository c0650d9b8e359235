#pragma once

#include <cstdint>

namespace symchar {

/// Identifies one reproducible random stream. The pair fully determines the
/// draw sequence; distinct stream indices give statistically independent
/// streams, so parallel consumers assign streams by item index rather than
/// by scheduling order.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

/// Counter-based generator: the SplitMix64 output function applied to
/// key + counter * golden-gamma. Randomly accessible, no shared state, and
/// the key mixes (master_seed, stream_index) through the same finalizer.
class CounterRng {
public:
    explicit CounterRng(SeedSpec seed)
        : key_(mix(mix(seed.master_seed + kGamma) ^ mix(seed.stream_index + kGamma2))) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

    /// Uniform double strictly inside (0, 1): 52 mantissa bits plus a half
    /// step, so logarithms of draws are always finite.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kGamma2 = 0xBF58476D1CE4E5B9ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace symchar
