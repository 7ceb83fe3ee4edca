#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qgb/circuit.hpp"
#include "qgb/noise_model.hpp"
#include "qgb/pmf.hpp"

namespace qgb {

/// Dense row-major 2^n x 2^n density matrix. The flat layout doubles as a
/// 2n-qubit amplitude array (column bits low, row bits high), which lets
/// gate application reuse the statevector kernels on both sides.
struct DensityMatrix {
    int n_qubits = 0;
    std::vector<std::complex<double>> elems;

    static DensityMatrix zero_state(int n_qubits);

    std::size_t dim() const { return std::size_t{1} << n_qubits; }
    std::complex<double>& at(std::size_t row, std::size_t col) { return elems[row * dim() + col]; }
    const std::complex<double>& at(std::size_t row, std::size_t col) const { return elems[row * dim() + col]; }

    double trace_real() const;

    /// Computational-basis probabilities: the real diagonal. This is the
    /// exact noisy PMF before any readout error.
    Pmf diagonal_pmf() const;
};

/// Evolves |0...0><0...0| through the circuit with channels attached per
/// the noise model: depolarizing right after the gates they apply to,
/// damping after every gate on each touched qubit. Readout is classical
/// and not part of the returned state. Supported up to n = 12.
DensityMatrix dm_simulate(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise);

}  // namespace qgb
