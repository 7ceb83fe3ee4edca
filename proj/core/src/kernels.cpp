#include "kernels.hpp"

#include <cmath>
#include <utility>

namespace qgb::kernels {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

void apply_1q(std::span<cplx> amps, int q, cplx u00, cplx u01, cplx u10, cplx u11) {
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i + step];
            amps[i] = cmul(u00, a0) + cmul(u01, a1);
            amps[i + step] = cmul(u10, a0) + cmul(u11, a1);
        }
    }
}

void apply_diag_1q(std::span<cplx> amps, int q, cplx d0, cplx d1) {
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            amps[i] = cmul(d0, amps[i]);
            amps[i + step] = cmul(d1, amps[i + step]);
        }
    }
}

void apply_h(std::span<cplx> amps, int q) {
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i + step];
            amps[i] = kInvSqrt2 * (a0 + a1);
            amps[i + step] = kInvSqrt2 * (a0 - a1);
        }
    }
}

void apply_sx(std::span<cplx> amps, int q) {
    // sqrt(X) = [[1+i, 1-i], [1-i, 1+i]] / 2
    const cplx u00{0.5, 0.5}, u01{0.5, -0.5};
    apply_1q(amps, q, u00, u01, u01, u00);
}

void apply_rz(std::span<cplx> amps, int q, double theta) {
    const double h = 0.5 * theta;
    apply_diag_1q(amps, q, {std::cos(h), -std::sin(h)}, {std::cos(h), std::sin(h)});
}

void apply_rx(std::span<cplx> amps, int q, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i + step];
            // [c, -is; -is, c]
            amps[i] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
            amps[i + step] = {c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
        }
    }
}

void apply_cx(std::span<cplx> amps, int control, int target) {
    const std::size_t dim = amps.size();
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) std::swap(amps[i], amps[i | tmask]);
    }
}

void apply_rxx(std::span<cplx> amps, int qa, int qb, double theta) {
    // exp(-i theta XX / 2): mixes each amplitude with its double-bit-flip
    // partner; pairs are enumerated once via the qa = 0 side.
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::size_t dim = amps.size();
    const std::size_t stepa = std::size_t{1} << qa;
    const std::size_t m = stepa | (std::size_t{1} << qb);
    for (std::size_t base = 0; base < dim; base += 2 * stepa) {
        for (std::size_t i = base; i < base + stepa; ++i) {
            const std::size_t j = i ^ m;
            const cplx a = amps[i];
            const cplx b = amps[j];
            amps[i] = {c * a.real() + s * b.imag(), c * a.imag() - s * b.real()};
            amps[j] = {c * b.real() + s * a.imag(), c * b.imag() - s * a.real()};
        }
    }
}

void apply_x(std::span<cplx> amps, int q) {
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) std::swap(amps[i], amps[i + step]);
    }
}

void apply_y(std::span<cplx> amps, int q) {
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i + step];
            amps[i] = {a1.imag(), -a1.real()};       // -i * a1
            amps[i + step] = {-a0.imag(), a0.real()};  // +i * a0
        }
    }
}

void apply_z(std::span<cplx> amps, int q) {
    const std::size_t dim = amps.size();
    const std::size_t step = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i = base; i < base + step; ++i) amps[i + step] = -amps[i + step];
    }
}

}  // namespace qgb::kernels
