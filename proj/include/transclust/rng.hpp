#pragma once

#include <cstdint>
#include <random>

namespace transclust {

/// Portable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distributions below are implemented here rather than taken
/// from <random>, because the standard library distributions differ between
/// implementations. Together this makes every generated point set and every
/// K-means initialisation reproducible bit-for-bit from a 64-bit seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal via the Box-Muller transform (second value cached).
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Derives an independent stream for the given index (restarts, workers).
    static std::uint64_t split(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace transclust
