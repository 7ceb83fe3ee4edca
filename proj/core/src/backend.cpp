#include "qgb/backend.hpp"

#include <string>

#include "qgb/density_matrix.hpp"
#include "qgb/errors.hpp"
#include "qgb/statevector.hpp"
#include "qgb/trajectory.hpp"

namespace qgb {

const char* backend_name(BackendMode mode) {
    switch (mode) {
        case BackendMode::Statevector: return "statevector";
        case BackendMode::DensityMatrix: return "density_matrix";
        case BackendMode::Trajectory: return "trajectory";
    }
    return "?";
}

BackendMode backend_from_name(std::string_view name) {
    if (name == "statevector") return BackendMode::Statevector;
    if (name == "density_matrix") return BackendMode::DensityMatrix;
    if (name == "trajectory") return BackendMode::Trajectory;
    throw validation_error("unknown backend '" + std::string(name) + "'");
}

void validate_backend(const BackendSpec& spec, int n_qubits) {
    spec.noise.validate();
    if (spec.mode == BackendMode::Statevector && spec.noise.has_channel_noise())
        throw validation_error("statevector backend supports readout error only; "
                               "use density_matrix or trajectory for channel noise");
    const int limit = spec.mode == BackendMode::DensityMatrix ? 12 : 14;
    if (n_qubits < 1 || n_qubits > limit)
        throw validation_error("backend " + std::string(backend_name(spec.mode)) + " supports 1.." +
                               std::to_string(limit) + " qubits");
    // Exact KL reporting for noisy trajectory runs goes through the
    // density-matrix fallback, so its width limit applies there too.
    if (spec.mode == BackendMode::Trajectory && spec.noise.has_channel_noise() && n_qubits > 12)
        throw validation_error("trajectory backend with channel noise supports 1..12 qubits");
}

Pmf exact_backend_pmf(const Circuit& circuit, std::span<const double> params, const BackendSpec& spec) {
    validate_backend(spec, circuit.n_qubits);
    Pmf pmf;
    const bool need_dm =
        spec.mode == BackendMode::DensityMatrix || (spec.mode == BackendMode::Trajectory && spec.noise.has_channel_noise());
    if (need_dm) {
        pmf = dm_simulate(circuit, params, spec.noise).diagonal_pmf();
    } else {
        pmf = exact_pmf(simulate(circuit, params));
    }
    if (spec.noise.has_readout()) pmf = confusion_matrix_pmf(pmf, spec.noise.p01, spec.noise.p10);
    return pmf;
}

ShotHistogram backend_sample(const Circuit& circuit, std::span<const double> params, const BackendSpec& spec,
                             std::uint64_t n_shots, RandomStream& rng) {
    validate_backend(spec, circuit.n_qubits);
    if (spec.mode == BackendMode::Trajectory) {
        return trajectory_histogram(circuit, params, spec.noise, n_shots, rng);
    }
    return sample_shots(exact_backend_pmf(circuit, params, spec), n_shots, rng);
}

}  // namespace qgb
