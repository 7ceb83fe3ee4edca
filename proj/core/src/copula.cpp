#include "qgb/copula.hpp"

#include "qgb/errors.hpp"

namespace qgb {

void CopulaSpec::validate() const {
    if (n_qubits < 2) throw validation_error("copula: n_qubits must be >= 2");
    if (n_qubits % n_registers != 0) throw validation_error("copula: n_qubits must be even");
    if (depth < 1) throw validation_error("copula: depth must be >= 1");
}

Circuit build_copula(const CopulaSpec& spec) {
    spec.validate();
    const int n = spec.n_qubits;
    const int m = spec.register_size();

    Circuit c;
    c.n_qubits = n;
    int slot = 0;

    for (int q = 0; q < m; ++q) c.gates.push_back(GateOp::h(q));
    for (int q = 0; q < m; ++q) c.gates.push_back(GateOp::cx(q, q + m));

    for (int layer = 0; layer < spec.depth; ++layer) {
        for (int q = 0; q < n; ++q) {
            c.gates.push_back(GateOp::rz(q, slot++));
            c.gates.push_back(GateOp::rx(q, slot++));
            c.gates.push_back(GateOp::rz(q, slot++));
        }
        for (int reg = 0; reg < CopulaSpec::n_registers; ++reg) {
            const int off = reg * m;
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    c.gates.push_back(GateOp::rxx(off + i, off + j, slot++));
                }
            }
        }
    }
    c.n_params = slot;
    c.validate();
    return c;
}

GateCount count_gates(const Circuit& circuit) {
    GateCount count;
    for (const GateOp& g : circuit.gates) {
        if (g.two_qubit()) {
            ++count.two_qubit;
        } else {
            ++count.one_qubit;
        }
    }
    return count;
}

}  // namespace qgb
