#pragma once

// Dense amplitude-array kernels shared by the statevector and
// density-matrix backends. An array of 2^n_total complex amplitudes is
// addressed with qubit q owning bit q of the index; the density matrix
// reuses the same kernels by treating row bits as qubits [n, 2n).
//
// Complex products are spelled out in real arithmetic so the compiler
// never falls back to the checked __muldc3 helper.

#include <complex>
#include <span>

namespace qgb::kernels {

using cplx = std::complex<double>;

inline cplx cmul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void apply_1q(std::span<cplx> amps, int q, cplx u00, cplx u01, cplx u10, cplx u11);
void apply_diag_1q(std::span<cplx> amps, int q, cplx d0, cplx d1);

void apply_h(std::span<cplx> amps, int q);
void apply_sx(std::span<cplx> amps, int q);
void apply_rz(std::span<cplx> amps, int q, double theta);
void apply_rx(std::span<cplx> amps, int q, double theta);
void apply_cx(std::span<cplx> amps, int control, int target);
void apply_rxx(std::span<cplx> amps, int qa, int qb, double theta);

void apply_x(std::span<cplx> amps, int q);
void apply_y(std::span<cplx> amps, int q);
void apply_z(std::span<cplx> amps, int q);

}  // namespace qgb::kernels
