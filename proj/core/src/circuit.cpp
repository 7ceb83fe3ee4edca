#include "qgb/circuit.hpp"

#include <string>
#include <vector>

#include "qgb/errors.hpp"

namespace qgb {

bool is_two_qubit(GateKind kind) { return kind == GateKind::CX || kind == GateKind::RXX; }

bool is_parameterized(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::RX || kind == GateKind::RXX;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::RZ: return "rz";
        case GateKind::RX: return "rx";
        case GateKind::SX: return "sx";
        case GateKind::CX: return "cx";
        case GateKind::RXX: return "rxx";
    }
    return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
    if (name == "h") return GateKind::H;
    if (name == "rz") return GateKind::RZ;
    if (name == "rx") return GateKind::RX;
    if (name == "sx") return GateKind::SX;
    if (name == "cx") return GateKind::CX;
    if (name == "rxx") return GateKind::RXX;
    throw validation_error("unknown gate kind '" + std::string(name) + "'");
}

void Circuit::validate() const {
    if (n_qubits < 1) throw validation_error("circuit: n_qubits must be >= 1");
    if (n_params < 0) throw validation_error("circuit: n_params must be >= 0");
    std::vector<bool> slot_used(static_cast<std::size_t>(n_params), false);
    for (const GateOp& g : gates) {
        if (g.q0 < 0 || g.q0 >= n_qubits) throw validation_error("circuit: qubit index out of range");
        if (g.two_qubit()) {
            if (g.q1 < 0 || g.q1 >= n_qubits) throw validation_error("circuit: qubit index out of range");
            if (g.q1 == g.q0) throw validation_error("circuit: two-qubit gate with identical qubits");
        } else if (g.q1 != -1) {
            throw validation_error("circuit: single-qubit gate carries a second qubit");
        }
        if (g.parameterized()) {
            if (g.param_slot < 0 || g.param_slot >= n_params)
                throw validation_error("circuit: param_slot out of range");
            slot_used[static_cast<std::size_t>(g.param_slot)] = true;
        } else if (g.param_slot != -1) {
            throw validation_error(std::string("circuit: ") + gate_name(g.kind) + " carries a param_slot");
        }
    }
    for (int s = 0; s < n_params; ++s) {
        if (!slot_used[static_cast<std::size_t>(s)])
            throw validation_error("circuit: unused param_slot " + std::to_string(s));
    }
}

}  // namespace qgb
