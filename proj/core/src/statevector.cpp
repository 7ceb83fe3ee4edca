#include "qgb/statevector.hpp"

#include <string>

#include "kernels.hpp"
#include "qgb/errors.hpp"

namespace qgb {

StateVector StateVector::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 24) throw validation_error("statevector: n_qubits out of supported range");
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    s.amps[0] = {1.0, 0.0};
    return s;
}

double StateVector::norm_sq() const {
    double acc = 0.0;
    for (const auto& a : amps) acc += a.real() * a.real() + a.imag() * a.imag();
    return acc;
}

namespace {

void check_gate(const StateVector& state, const GateOp& gate, bool has_angle) {
    if (gate.q0 < 0 || gate.q0 >= state.n_qubits) throw validation_error("apply_gate: qubit index out of range");
    if (gate.two_qubit()) {
        if (gate.q1 < 0 || gate.q1 >= state.n_qubits) throw validation_error("apply_gate: qubit index out of range");
        if (gate.q1 == gate.q0) throw validation_error("apply_gate: identical qubits");
    }
    if (gate.parameterized() && !has_angle)
        throw validation_error(std::string("apply_gate: ") + gate_name(gate.kind) + " requires an angle");
    if (!gate.parameterized() && has_angle)
        throw validation_error(std::string("apply_gate: ") + gate_name(gate.kind) + " takes no angle");
}

}  // namespace

void apply_gate(StateVector& state, const GateOp& gate, std::optional<double> angle) {
    check_gate(state, gate, angle.has_value());
    std::span<kernels::cplx> amps{state.amps};
    switch (gate.kind) {
        case GateKind::H: kernels::apply_h(amps, gate.q0); break;
        case GateKind::SX: kernels::apply_sx(amps, gate.q0); break;
        case GateKind::RZ: kernels::apply_rz(amps, gate.q0, *angle); break;
        case GateKind::RX: kernels::apply_rx(amps, gate.q0, *angle); break;
        case GateKind::CX: kernels::apply_cx(amps, gate.q0, gate.q1); break;
        case GateKind::RXX: kernels::apply_rxx(amps, gate.q0, gate.q1, *angle); break;
    }
}

StateVector simulate(const Circuit& circuit, std::span<const double> params) {
    if (static_cast<int>(params.size()) != circuit.n_params)
        throw validation_error("simulate: expected " + std::to_string(circuit.n_params) + " parameters, got " +
                               std::to_string(params.size()));
    StateVector state = StateVector::zero_state(circuit.n_qubits);
    for (const GateOp& g : circuit.gates) {
        if (g.parameterized()) {
            apply_gate(state, g, params[static_cast<std::size_t>(g.param_slot)]);
        } else {
            apply_gate(state, g);
        }
    }
    return state;
}

Pmf exact_pmf(const StateVector& state) {
    Pmf pmf;
    pmf.probs.resize(state.amps.size());
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        const auto& a = state.amps[i];
        pmf.probs[i] = a.real() * a.real() + a.imag() * a.imag();
    }
    return pmf;
}

}  // namespace qgb
