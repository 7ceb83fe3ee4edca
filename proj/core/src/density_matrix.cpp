#include "qgb/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kernels.hpp"
#include "qgb/errors.hpp"

namespace qgb {

using kernels::cplx;

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 12)
        throw validation_error("density matrix: n_qubits out of supported range (1..12)");
    DensityMatrix rho;
    rho.n_qubits = n_qubits;
    rho.elems.assign(std::size_t{1} << (2 * n_qubits), {0.0, 0.0});
    rho.elems[0] = {1.0, 0.0};
    return rho;
}

double DensityMatrix::trace_real() const {
    double acc = 0.0;
    for (std::size_t r = 0, d = dim(); r < d; ++r) acc += at(r, r).real();
    return acc;
}

Pmf DensityMatrix::diagonal_pmf() const {
    Pmf pmf;
    const std::size_t d = dim();
    pmf.probs.resize(d);
    for (std::size_t r = 0; r < d; ++r) pmf.probs[r] = std::max(0.0, at(r, r).real());
    return pmf;
}

namespace {

inline std::size_t insert_zero_bit(std::size_t x, int pos) {
    const std::size_t low = x & ((std::size_t{1} << pos) - 1);
    return ((x >> pos) << (pos + 1)) | low;
}

// Applies U on the row side and conj(U) on the column side of the flat
// (2n)-bit layout: column bits are [0, n), row bits are [n, 2n).
void apply_unitary_both_sides(DensityMatrix& rho, const GateOp& g, double angle) {
    const int n = rho.n_qubits;
    std::span<cplx> amps{rho.elems};
    switch (g.kind) {
        case GateKind::H:
            kernels::apply_h(amps, g.q0 + n);
            kernels::apply_h(amps, g.q0);
            break;
        case GateKind::SX: {
            kernels::apply_sx(amps, g.q0 + n);
            const cplx c00{0.5, -0.5}, c01{0.5, 0.5};  // conj(sqrt X)
            kernels::apply_1q(amps, g.q0, c00, c01, c01, c00);
            break;
        }
        case GateKind::RZ:
            kernels::apply_rz(amps, g.q0 + n, angle);
            kernels::apply_rz(amps, g.q0, -angle);
            break;
        case GateKind::RX:
            kernels::apply_rx(amps, g.q0 + n, angle);
            kernels::apply_rx(amps, g.q0, -angle);
            break;
        case GateKind::CX:
            kernels::apply_cx(amps, g.q0 + n, g.q1 + n);
            kernels::apply_cx(amps, g.q0, g.q1);
            break;
        case GateKind::RXX:
            kernels::apply_rxx(amps, g.q0 + n, g.q1 + n, angle);
            kernels::apply_rxx(amps, g.q0, g.q1, -angle);
            break;
    }
}

// rho -> (1-p) rho + p (I/4 (x) Tr_pair rho): the uniform two-qubit Pauli
// channel in closed form.
void depolarize_2q(DensityMatrix& rho, int qa, int qb, double p) {
    const int n = rho.n_qubits;
    const int a = std::min(qa, qb), b = std::max(qa, qb);
    const std::size_t col_a = std::size_t{1} << a, col_b = std::size_t{1} << b;
    const std::size_t row_a = std::size_t{1} << (a + n), row_b = std::size_t{1} << (b + n);
    const std::size_t pair_bits[4] = {0, col_a, col_b, col_a | col_b};
    const std::size_t groups = rho.elems.size() >> 4;
    const double keep = 1.0 - p;
    const double mix = 0.25 * p;
    for (std::size_t k = 0; k < groups; ++k) {
        std::size_t base = insert_zero_bit(k, a);
        base = insert_zero_bit(base, b);
        base = insert_zero_bit(base, a + n);
        base = insert_zero_bit(base, b + n);
        cplx tr{0.0, 0.0};
        for (int u = 0; u < 4; ++u) {
            const std::size_t rbits = ((u & 1) ? row_a : 0) | ((u & 2) ? row_b : 0);
            tr += rho.elems[base | rbits | pair_bits[u]];
        }
        const cplx add = mix * tr;
        for (int ur = 0; ur < 4; ++ur) {
            const std::size_t rbits = ((ur & 1) ? row_a : 0) | ((ur & 2) ? row_b : 0);
            for (int uc = 0; uc < 4; ++uc) {
                cplx& e = rho.elems[base | rbits | pair_bits[uc]];
                e *= keep;
                if (ur == uc) e += add;
            }
        }
    }
}

void depolarize_1q(DensityMatrix& rho, int q, double p) {
    const int n = rho.n_qubits;
    const std::size_t col = std::size_t{1} << q, row = std::size_t{1} << (q + n);
    const std::size_t groups = rho.elems.size() >> 2;
    const double keep = 1.0 - p;
    const double mix = 0.5 * p;
    for (std::size_t k = 0; k < groups; ++k) {
        std::size_t base = insert_zero_bit(k, q);
        base = insert_zero_bit(base, q + n);
        cplx& e00 = rho.elems[base];
        cplx& e01 = rho.elems[base | col];
        cplx& e10 = rho.elems[base | row];
        cplx& e11 = rho.elems[base | row | col];
        const cplx add = mix * (e00 + e11);
        e00 = keep * e00 + add;
        e11 = keep * e11 + add;
        e01 *= keep;
        e10 *= keep;
    }
}

void amplitude_damp(DensityMatrix& rho, int q, double gamma) {
    const int n = rho.n_qubits;
    const std::size_t col = std::size_t{1} << q, row = std::size_t{1} << (q + n);
    const std::size_t groups = rho.elems.size() >> 2;
    const double s = std::sqrt(1.0 - gamma);
    for (std::size_t k = 0; k < groups; ++k) {
        std::size_t base = insert_zero_bit(k, q);
        base = insert_zero_bit(base, q + n);
        cplx& e00 = rho.elems[base];
        cplx& e01 = rho.elems[base | col];
        cplx& e10 = rho.elems[base | row];
        cplx& e11 = rho.elems[base | row | col];
        e00 += gamma * e11;
        e11 *= 1.0 - gamma;
        e01 *= s;
        e10 *= s;
    }
}

void phase_damp(DensityMatrix& rho, int q, double gamma) {
    const int n = rho.n_qubits;
    const std::size_t col = std::size_t{1} << q, row = std::size_t{1} << (q + n);
    const std::size_t groups = rho.elems.size() >> 2;
    const double s = std::sqrt(1.0 - gamma);
    for (std::size_t k = 0; k < groups; ++k) {
        std::size_t base = insert_zero_bit(k, q);
        base = insert_zero_bit(base, q + n);
        rho.elems[base | col] *= s;
        rho.elems[base | row] *= s;
    }
}

}  // namespace

DensityMatrix dm_simulate(const Circuit& circuit, std::span<const double> params, const NoiseModel& noise) {
    if (static_cast<int>(params.size()) != circuit.n_params)
        throw validation_error("dm_simulate: expected " + std::to_string(circuit.n_params) + " parameters, got " +
                               std::to_string(params.size()));
    noise.validate();
    DensityMatrix rho = DensityMatrix::zero_state(circuit.n_qubits);
    for (const GateOp& g : circuit.gates) {
        const double angle = g.parameterized() ? params[static_cast<std::size_t>(g.param_slot)] : 0.0;
        apply_unitary_both_sides(rho, g, angle);
        if (g.two_qubit() && noise.p_depol_2q > 0.0) depolarize_2q(rho, g.q0, g.q1, noise.p_depol_2q);
        if (!g.two_qubit() && noise.p_depol_1q > 0.0) depolarize_1q(rho, g.q0, noise.p_depol_1q);
        const int qa = g.two_qubit() ? std::min(g.q0, g.q1) : g.q0;
        const int qb = g.two_qubit() ? std::max(g.q0, g.q1) : -1;
        if (noise.amp_damping > 0.0) {
            amplitude_damp(rho, qa, noise.amp_damping);
            if (qb >= 0) amplitude_damp(rho, qb, noise.amp_damping);
        }
        if (noise.phase_damping > 0.0) {
            phase_damp(rho, qa, noise.phase_damping);
            if (qb >= 0) phase_damp(rho, qb, noise.phase_damping);
        }
    }
    return rho;
}

}  // namespace qgb
