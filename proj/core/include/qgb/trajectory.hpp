#pragma once

#include <cstdint>
#include <span>

#include "qgb/circuit.hpp"
#include "qgb/noise_model.hpp"
#include "qgb/pmf.hpp"
#include "qgb/rng.hpp"

namespace qgb {

/// One measurement outcome from a stochastic pure-state trajectory.
/// After each noisy gate a Kraus operator is sampled with probability
/// ||K psi||^2 and the state renormalized; the final outcome is drawn
/// from the Born PMF and readout flips are applied per qubit.
std::uint64_t trajectory_shot(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise,
                              RandomStream& rng);

/// Histogram of n_shots independent trajectories.
ShotHistogram trajectory_histogram(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise,
                                   std::uint64_t n_shots, RandomStream& rng);

}  // namespace qgb
