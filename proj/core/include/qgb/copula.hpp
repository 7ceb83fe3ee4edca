#pragma once

#include <cstdint>

#include "qgb/circuit.hpp"

namespace qgb {

/// Copula-circuit shape: two registers of n_qubits/2 qubits each (one per
/// data dimension), `depth` variational layers.
struct CopulaSpec {
    int n_qubits = 0;
    int depth = 1;
    static constexpr int n_registers = 2;

    int register_size() const { return n_qubits / n_registers; }
    void validate() const;
};

struct GateCount {
    std::int64_t one_qubit = 0;
    std::int64_t two_qubit = 0;
    bool operator==(const GateCount&) const = default;
};

/// Builds the copula ansatz: H on every register-0 qubit and CX onto the
/// matching register-1 qubit (the entangling preamble), then per layer a
/// parameterized RZ-RX-RZ triple on every qubit followed by parameterized
/// RXX on every qubit pair inside each register (pairs in lexicographic
/// order, parameter slots in emission order).
///
/// n_params = depth * (3n + 2 * C(n/2, 2)). By construction the exact PMF
/// marginalized onto either register is uniform for every parameter
/// vector.
Circuit build_copula(const CopulaSpec& spec);

/// Classifies gates by arity.
GateCount count_gates(const Circuit& circuit);

}  // namespace qgb
