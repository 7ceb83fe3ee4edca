#include "qgb/param_shift.hpp"

#include <cmath>
#include <string>

#include "qgb/errors.hpp"

namespace qgb {

namespace {

// Evaluates the backend PMF with one gate occurrence's angle offset.
Pmf shifted_pmf(const Circuit& circuit, std::span<const double> params, std::size_t gate_index, double delta,
                const BackendSpec& backend) {
    Circuit shifted = circuit;
    GateOp& g = shifted.gates[gate_index];
    std::vector<double> p(params.begin(), params.end());
    // Give the shifted occurrence its own slot so the offset stays local.
    p.push_back(p[static_cast<std::size_t>(g.param_slot)] + delta);
    g.param_slot = shifted.n_params;
    shifted.n_params += 1;
    return exact_backend_pmf(shifted, p, backend);
}

}  // namespace

std::vector<double> pmf_param_shift_grad(const Circuit& circuit, std::span<const double> params, int param_index,
                                         const BackendSpec& backend) {
    if (static_cast<int>(params.size()) != circuit.n_params)
        throw validation_error("param_shift: parameter length mismatch");
    if (param_index < 0 || param_index >= circuit.n_params)
        throw validation_error("param_shift: parameter index out of range");
    constexpr double kShift = 1.5707963267948966;  // pi/2

    std::vector<double> grad(std::size_t{1} << circuit.n_qubits, 0.0);
    bool found = false;
    for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
        const GateOp& g = circuit.gates[gi];
        if (g.param_slot != param_index) continue;
        if (!is_parameterized(g.kind))
            throw validation_error(std::string("param_shift: gate kind ") + gate_name(g.kind) + " is not shiftable");
        found = true;
        const Pmf plus = shifted_pmf(circuit, params, gi, kShift, backend);
        const Pmf minus = shifted_pmf(circuit, params, gi, -kShift, backend);
        for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += 0.5 * (plus.probs[i] - minus.probs[i]);
    }
    if (!found) throw validation_error("param_shift: no gate bound to parameter " + std::to_string(param_index));
    return grad;
}

}  // namespace qgb
