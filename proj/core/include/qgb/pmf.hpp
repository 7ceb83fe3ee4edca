#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgb/rng.hpp"

namespace qgb {

/// Discrete distribution over the 2^n computational-basis outcomes.
/// Qubit 0 is the least-significant bit of the outcome index.
struct Pmf {
    std::vector<double> probs;

    static Pmf uniform(int n_qubits);

    int n_qubits() const;

    /// Entries nonnegative, total within tol of 1, size a power of two.
    void validate(double tol = 1e-9) const;
};

struct ShotHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t n_shots = 0;

    Pmf empirical() const;
};

/// Multinomial draw of n_shots outcomes from pmf. Uses per-shot CDF
/// inversion when shots are scarce relative to the bin count and
/// sequential conditional binomials otherwise; both are exact.
ShotHistogram sample_shots(const Pmf& pmf, std::uint64_t n_shots, RandomStream& rng);

/// Inclusive running sums, last entry forced to the exact total.
std::vector<double> inclusive_cdf(std::span<const double> probs);

/// One categorical draw from a prebuilt inclusive CDF.
std::size_t sample_index(std::span<const double> cdf, RandomStream& rng);

}  // namespace qgb
