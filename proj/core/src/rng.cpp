#include "qgb/rng.hpp"

#include <cmath>
#include <limits>

#include "qgb/errors.hpp"

namespace qgb {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) {
    // Expand the user seed so that nearby seeds (master_seed + rep index)
    // give unrelated streams.
    std::uint64_t s = seed;
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s) >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s) >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s) >> 32)};
    engine_.seed(seq);
}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::uint64_t RandomStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw validation_error("uniform_below: n must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

std::uint64_t RandomStream::binomial(std::uint64_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw validation_error("binomial: p outside [0,1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    if (p > 0.5) return n - binomial(n, 1.0 - p);
    const double mean = static_cast<double>(n) * p;
    if (mean < 14.0) return binomial_inversion(n, p);
    return binomial_btrs(n, p);
}

// Waiting-time inversion: expected cost O(np).
std::uint64_t RandomStream::binomial_inversion(std::uint64_t n, double p) {
    const double log_q = std::log1p(-p);
    std::uint64_t count = 0;
    double sum = 0.0;
    for (;;) {
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        sum += std::floor(std::log(u) / log_q) + 1.0;
        if (sum > static_cast<double>(n)) return count;
        ++count;
    }
}

// Hormann's BTRS transformed-rejection sampler; requires p <= 0.5, np >= 10.
std::uint64_t RandomStream::binomial_btrs(std::uint64_t n, double p) {
    const double nd = static_cast<double>(n);
    const double q = 1.0 - p;
    const double spq = std::sqrt(nd * p * q);
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = nd * p + 0.5;
    const double v_r = 0.92 - 4.2 / b;
    const double u_rv_r = 0.86 * v_r;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double lpq = std::log(p / q);
    const double m = std::floor((nd + 1.0) * p);
    const double h = std::lgamma(m + 1.0) + std::lgamma(nd - m + 1.0);
    for (;;) {
        double v = uniform01();
        double u;
        if (v <= u_rv_r) {
            u = v / v_r - 0.43;
            return static_cast<std::uint64_t>(std::floor((2.0 * a / (0.5 - std::fabs(u)) + b) * u + c));
        }
        if (v >= v_r) {
            u = uniform01() - 0.5;
        } else {
            u = v / v_r - 0.93;
            u = (u < 0.0 ? -0.5 : 0.5) - u;
            v = v_r * uniform01();
        }
        const double us = 0.5 - std::fabs(u);
        const double kd = std::floor((2.0 * a / us + b) * u + c);
        if (kd < 0.0 || kd > nd) continue;
        v = v * alpha / (a / (us * us) + b);
        if (std::log(v) <= h - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0) + (kd - m) * lpq) {
            return static_cast<std::uint64_t>(kd);
        }
    }
}

}  // namespace qgb
