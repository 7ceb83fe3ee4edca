#pragma once

#include <cstdint>
#include <random>

namespace qgb {

/// One step of the splitmix64 sequence; used for seed expansion and hashing.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic random stream. Each stream is owned by exactly one
/// execution thread; independent streams may run concurrently.
///
/// All distribution transforms (uniform, normal, binomial) are implemented
/// in this class instead of <random> adaptors so that a (seed, call
/// sequence) pair reproduces bit-identical values on any platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Unbiased uniform integer in [0, n); n must be positive.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Standard normal deviate (Marsaglia polar method, spare cached).
    double normal();

    /// Binomial(n, p) draw. Inversion for small means, transformed
    /// rejection (BTRS) for large ones; exact in both regimes.
    std::uint64_t binomial(std::uint64_t n, double p);

private:
    std::uint64_t binomial_inversion(std::uint64_t n, double p);
    std::uint64_t binomial_btrs(std::uint64_t n, double p);

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qgb
