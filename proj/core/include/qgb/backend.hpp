#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "qgb/circuit.hpp"
#include "qgb/noise_model.hpp"
#include "qgb/pmf.hpp"
#include "qgb/rng.hpp"

namespace qgb {

enum class BackendMode { Statevector, DensityMatrix, Trajectory };

const char* backend_name(BackendMode mode);
BackendMode backend_from_name(std::string_view name);

struct BackendSpec {
    BackendMode mode = BackendMode::Statevector;
    NoiseModel noise;
};

/// Rejects combinations the backend cannot realize: channel noise on the
/// statevector backend, and widths beyond the dense-representation limits
/// (14 qubits statevector/trajectory, 12 density matrix).
void validate_backend(const BackendSpec& spec, int n_qubits);

/// Exact observable PMF of the model on this backend, readout included.
/// The trajectory backend has no closed form and falls back to the
/// density-matrix evolution.
Pmf exact_backend_pmf(const Circuit& circuit, std::span<const double> params, const BackendSpec& spec);

/// Shot-sampled histogram; costs n_shots circuit executions.
ShotHistogram backend_sample(const Circuit& circuit, std::span<const double> params, const BackendSpec& spec,
                             std::uint64_t n_shots, RandomStream& rng);

}  // namespace qgb
