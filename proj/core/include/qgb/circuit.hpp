#pragma once

#include <string_view>
#include <vector>

namespace qgb {

/// Native gate set: one-qubit H, RZ, RX, SX and two-qubit CX, RXX.
/// Rotations follow the exp(-i theta G / 2) convention.
enum class GateKind { H, RZ, RX, SX, CX, RXX };

bool is_two_qubit(GateKind kind);
bool is_parameterized(GateKind kind);
const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

/// One gate instruction. Single-qubit gates leave q1 at -1; fixed gates
/// leave param_slot at -1. CX stores (control, target) as (q0, q1).
struct GateOp {
    GateKind kind = GateKind::H;
    int q0 = 0;
    int q1 = -1;
    int param_slot = -1;

    static GateOp h(int q) { return {GateKind::H, q, -1, -1}; }
    static GateOp sx(int q) { return {GateKind::SX, q, -1, -1}; }
    static GateOp rz(int q, int slot) { return {GateKind::RZ, q, -1, slot}; }
    static GateOp rx(int q, int slot) { return {GateKind::RX, q, -1, slot}; }
    static GateOp cx(int control, int target) { return {GateKind::CX, control, target, -1}; }
    static GateOp rxx(int qa, int qb, int slot) { return {GateKind::RXX, qa, qb, slot}; }

    bool two_qubit() const { return is_two_qubit(kind); }
    bool parameterized() const { return is_parameterized(kind); }
};

/// Ordered gate program over n_qubits with n_params angle slots.
struct Circuit {
    int n_qubits = 0;
    std::vector<GateOp> gates;
    int n_params = 0;

    /// Checks qubit ranges, slot assignment rules, and that n_params
    /// equals the number of distinct slots in use.
    void validate() const;
};

}  // namespace qgb
