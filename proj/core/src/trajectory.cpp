#include "qgb/trajectory.hpp"

#include <cmath>
#include <string>

#include "kernels.hpp"
#include "qgb/errors.hpp"
#include "qgb/statevector.hpp"

namespace qgb {

using kernels::cplx;

namespace {

void apply_pauli(std::span<cplx> amps, int q, int which) {
    switch (which & 3) {
        case 0: break;
        case 1: kernels::apply_x(amps, q); break;
        case 2: kernels::apply_y(amps, q); break;
        case 3: kernels::apply_z(amps, q); break;
    }
}

double prob_bit_one(std::span<const cplx> amps, int q) {
    const std::size_t step = std::size_t{1} << q;
    double acc = 0.0;
    for (std::size_t base = 0; base < amps.size(); base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const cplx a = amps[i + step];
            acc += a.real() * a.real() + a.imag() * a.imag();
        }
    }
    return acc;
}

// Samples between K0 = diag(1, sqrt(1-g)) and the jump operator, then
// renormalizes. `to_one` distinguishes phase damping (jump projects onto
// |1><1|) from amplitude damping (jump maps |1> to |0>).
void damp_qubit(std::span<cplx> amps, int q, double gamma, bool to_one, RandomStream& rng) {
    const double p1 = prob_bit_one(amps, q);
    const double w_jump = gamma * p1;
    const std::size_t step = std::size_t{1} << q;
    if (rng.uniform01() < w_jump) {
        const double inv = 1.0 / std::sqrt(p1);
        for (std::size_t base = 0; base < amps.size(); base += 2 * step) {
            for (std::size_t i = base; i < base + step; ++i) {
                if (to_one) {
                    amps[i] = {0.0, 0.0};
                    amps[i + step] *= inv;
                } else {
                    amps[i] = amps[i + step] * inv;
                    amps[i + step] = {0.0, 0.0};
                }
            }
        }
    } else {
        const double inv = 1.0 / std::sqrt(1.0 - w_jump);
        const double keep = std::sqrt(1.0 - gamma) * inv;
        for (std::size_t base = 0; base < amps.size(); base += 2 * step) {
            for (std::size_t i = base; i < base + step; ++i) {
                amps[i] *= inv;
                amps[i + step] *= keep;
            }
        }
    }
}

std::uint64_t measure(std::span<const cplx> amps, RandomStream& rng) {
    double total = 0.0;
    for (const cplx& a : amps) total += a.real() * a.real() + a.imag() * a.imag();
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const cplx a = amps[i];
        acc += a.real() * a.real() + a.imag() * a.imag();
        if (u < acc) return i;
    }
    return amps.size() - 1;
}

}  // namespace

std::uint64_t trajectory_shot(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise,
                              RandomStream& rng) {
    if (static_cast<int>(params.size()) != circuit.n_params)
        throw validation_error("trajectory_shot: expected " + std::to_string(circuit.n_params) +
                               " parameters, got " + std::to_string(params.size()));
    noise.validate();
    StateVector state = StateVector::zero_state(circuit.n_qubits);
    std::span<cplx> amps{state.amps};
    for (const GateOp& g : circuit.gates) {
        if (g.parameterized()) {
            apply_gate(state, g, params[static_cast<std::size_t>(g.param_slot)]);
        } else {
            apply_gate(state, g);
        }
        if (g.two_qubit() && noise.p_depol_2q > 0.0) {
            if (rng.uniform01() < noise.p_depol_2q) {
                const std::uint64_t pick = rng.uniform_below(16);
                apply_pauli(amps, g.q0, static_cast<int>(pick & 3));
                apply_pauli(amps, g.q1, static_cast<int>((pick >> 2) & 3));
            }
        }
        if (!g.two_qubit() && noise.p_depol_1q > 0.0) {
            if (rng.uniform01() < noise.p_depol_1q) {
                apply_pauli(amps, g.q0, static_cast<int>(rng.uniform_below(4)));
            }
        }
        const int qa = g.two_qubit() ? std::min(g.q0, g.q1) : g.q0;
        const int qb = g.two_qubit() ? std::max(g.q0, g.q1) : -1;
        if (noise.amp_damping > 0.0) {
            damp_qubit(amps, qa, noise.amp_damping, false, rng);
            if (qb >= 0) damp_qubit(amps, qb, noise.amp_damping, false, rng);
        }
        if (noise.phase_damping > 0.0) {
            damp_qubit(amps, qa, noise.phase_damping, true, rng);
            if (qb >= 0) damp_qubit(amps, qb, noise.phase_damping, true, rng);
        }
    }
    std::uint64_t outcome = measure(amps, rng);
    if (noise.has_readout()) {
        for (int q = 0; q < circuit.n_qubits; ++q) {
            const std::uint64_t mask = std::uint64_t{1} << q;
            const double flip = (outcome & mask) ? noise.p10 : noise.p01;
            if (flip > 0.0 && rng.uniform01() < flip) outcome ^= mask;
        }
    }
    return outcome;
}

ShotHistogram trajectory_histogram(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise,
                                   std::uint64_t n_shots, RandomStream& rng) {
    if (n_shots == 0) throw validation_error("trajectory_histogram: n_shots must be >= 1");
    ShotHistogram hist;
    hist.counts.assign(std::size_t{1} << circuit.n_qubits, 0);
    hist.n_shots = n_shots;
    for (std::uint64_t s = 0; s < n_shots; ++s) ++hist.counts[trajectory_shot(circuit, params, noise, rng)];
    return hist;
}

}  // namespace qgb
