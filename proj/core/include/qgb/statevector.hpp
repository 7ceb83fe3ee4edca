#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qgb/circuit.hpp"
#include "qgb/pmf.hpp"

namespace qgb {

/// Dense 2^n amplitude vector; qubit 0 is the least-significant bit of
/// the basis index.
struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amps;

    static StateVector zero_state(int n_qubits);

    double norm_sq() const;
};

/// Applies one gate in place. An angle must be supplied exactly when the
/// gate kind is parameterized.
void apply_gate(StateVector& state, const GateOp& gate, std::optional<double> angle = std::nullopt);

/// Runs the circuit on |0...0>. params.size() must equal circuit.n_params.
StateVector simulate(const Circuit& circuit, std::span<const double> params);

/// Born-rule probabilities |amps_i|^2.
Pmf exact_pmf(const StateVector& state);

}  // namespace qgb
