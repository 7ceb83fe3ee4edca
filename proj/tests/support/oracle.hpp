#pragma once

// Dense-matrix reference implementations used to cross-check the fast
// kernels. Everything here is built from explicit Eigen matrix algebra
// (kron products, Taylor-series matrix exponentials, Kraus sums) and
// shares no code with the library's simulation path.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qgb/circuit.hpp"
#include "qgb/density_matrix.hpp"
#include "qgb/noise_model.hpp"
#include "qgb/pmf.hpp"
#include "qgb/rng.hpp"
#include "qgb/statevector.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cplx = std::complex<double>;

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Mat pauli(int which) {
    Mat m(2, 2);
    switch (which) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

/// Scaling-and-squaring Taylor matrix exponential.
inline Mat matrix_exp(const Mat& a) {
    int scale = 0;
    double norm = a.cwiseAbs().sum();
    while (norm > 0.5) {
        norm /= 2.0;
        ++scale;
    }
    const Mat b = a / std::pow(2.0, scale);
    Mat term = Mat::Identity(a.rows(), a.cols());
    Mat acc = term;
    for (int k = 1; k <= 30; ++k) {
        term = (term * b) / static_cast<double>(k);
        acc += term;
    }
    for (int k = 0; k < scale; ++k) acc = acc * acc;
    return acc;
}

/// 2x2 or 4x4 gate matrix. Two-qubit matrices use index bit 0 for the
/// gate's first qubit (CX control) and bit 1 for the second (CX target).
inline Mat gate_matrix(qgb::GateKind kind, double angle) {
    using qgb::GateKind;
    const cplx i1(0.0, 1.0);
    switch (kind) {
        case GateKind::H: {
            Mat m(2, 2);
            m << 1, 1, 1, -1;
            return m / std::sqrt(2.0);
        }
        case GateKind::SX: {
            Mat m(2, 2);
            m << cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5);
            return m;
        }
        case GateKind::RZ:
            return matrix_exp(-i1 * (angle / 2.0) * pauli(3));
        case GateKind::RX:
            return matrix_exp(-i1 * (angle / 2.0) * pauli(1));
        case GateKind::CX: {
            Mat m = Mat::Zero(4, 4);
            // basis index = control + 2 * target
            m(0, 0) = 1;  // c=0,t=0
            m(2, 2) = 1;  // c=0,t=1
            m(3, 1) = 1;  // c=1,t=0 -> c=1,t=1
            m(1, 3) = 1;
            return m;
        }
        case GateKind::RXX:
            return matrix_exp(-i1 * (angle / 2.0) * kron(pauli(1), pauli(1)));
    }
    return Mat::Identity(2, 2);
}

/// Embeds a 1- or 2-qubit matrix into the full 2^n space; qubit q owns
/// bit q of the basis index.
inline Mat embed(const Mat& u, const std::vector<int>& qubits, int n_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    std::uint64_t target_mask = 0;
    for (const int q : qubits) target_mask |= std::uint64_t{1} << q;
    Mat out = Mat::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if ((static_cast<std::uint64_t>(i) & ~target_mask) != (static_cast<std::uint64_t>(j) & ~target_mask))
                continue;
            std::uint64_t si = 0, sj = 0;
            for (std::size_t k = 0; k < qubits.size(); ++k) {
                si |= ((static_cast<std::uint64_t>(i) >> qubits[k]) & 1) << k;
                sj |= ((static_cast<std::uint64_t>(j) >> qubits[k]) & 1) << k;
            }
            out(i, j) = u(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(sj));
        }
    }
    return out;
}

inline Mat embedded_gate(const qgb::GateOp& g, double angle, int n_qubits) {
    const Mat u = gate_matrix(g.kind, angle);
    if (g.two_qubit()) return embed(u, {g.q0, g.q1}, n_qubits);
    return embed(u, {g.q0}, n_qubits);
}

inline Mat circuit_unitary(const qgb::Circuit& circuit, std::span<const double> params) {
    const Eigen::Index dim = Eigen::Index(1) << circuit.n_qubits;
    Mat u = Mat::Identity(dim, dim);
    for (const qgb::GateOp& g : circuit.gates) {
        const double angle = g.parameterized() ? params[static_cast<std::size_t>(g.param_slot)] : 0.0;
        u = embedded_gate(g, angle, circuit.n_qubits) * u;
    }
    return u;
}

inline Vec statevector_to_eigen(const qgb::StateVector& s) {
    Vec v(static_cast<Eigen::Index>(s.amps.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = s.amps[static_cast<std::size_t>(i)];
    return v;
}

inline Mat dm_to_eigen(const qgb::DensityMatrix& rho) {
    const auto dim = static_cast<Eigen::Index>(rho.dim());
    Mat m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = rho.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    return m;
}

inline Mat apply_kraus(const Mat& rho, const std::vector<Mat>& kraus) {
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    for (const Mat& k : kraus) out += k * rho * k.adjoint();
    return out;
}

/// Kraus set of the "uniform 16-Pauli with probability p" channel on the
/// given pair, embedded in n qubits.
inline std::vector<Mat> depol2_kraus(int qa, int qb, double p, int n_qubits) {
    std::vector<Mat> kraus;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    kraus.push_back(std::sqrt(1.0 - p) * Mat::Identity(dim, dim));
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Mat pa = embed(pauli(a), {qa}, n_qubits);
            const Mat pb = embed(pauli(b), {qb}, n_qubits);
            kraus.push_back(std::sqrt(p / 16.0) * (pb * pa));
        }
    }
    return kraus;
}

inline std::vector<Mat> depol1_kraus(int q, double p, int n_qubits) {
    std::vector<Mat> kraus;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    kraus.push_back(std::sqrt(1.0 - p) * Mat::Identity(dim, dim));
    for (int a = 0; a < 4; ++a) kraus.push_back(std::sqrt(p / 4.0) * embed(pauli(a), {q}, n_qubits));
    return kraus;
}

inline std::vector<Mat> damping_kraus(int q, double gamma, bool phase, int n_qubits) {
    Mat k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
    if (phase) {
        k1 << 0, 0, 0, std::sqrt(gamma);
    } else {
        k1 << 0, std::sqrt(gamma), 0, 0;
    }
    return {embed(k0, {q}, n_qubits), embed(k1, {q}, n_qubits)};
}

/// Dense density-matrix evolution with the same channel placement the
/// library documents: gate, then depolarizing, then amplitude damping,
/// then phase damping on each touched qubit (ascending).
inline Mat dm_reference(const qgb::Circuit& circuit, std::span<const double> params, const qgb::NoiseModel& noise) {
    const Eigen::Index dim = Eigen::Index(1) << circuit.n_qubits;
    Mat rho = Mat::Zero(dim, dim);
    rho(0, 0) = 1.0;
    for (const qgb::GateOp& g : circuit.gates) {
        const double angle = g.parameterized() ? params[static_cast<std::size_t>(g.param_slot)] : 0.0;
        const Mat u = embedded_gate(g, angle, circuit.n_qubits);
        rho = u * rho * u.adjoint();
        if (g.two_qubit() && noise.p_depol_2q > 0.0)
            rho = apply_kraus(rho, depol2_kraus(g.q0, g.q1, noise.p_depol_2q, circuit.n_qubits));
        if (!g.two_qubit() && noise.p_depol_1q > 0.0)
            rho = apply_kraus(rho, depol1_kraus(g.q0, noise.p_depol_1q, circuit.n_qubits));
        const int qa = g.two_qubit() ? std::min(g.q0, g.q1) : g.q0;
        const int qb = g.two_qubit() ? std::max(g.q0, g.q1) : -1;
        if (noise.amp_damping > 0.0) {
            rho = apply_kraus(rho, damping_kraus(qa, noise.amp_damping, false, circuit.n_qubits));
            if (qb >= 0) rho = apply_kraus(rho, damping_kraus(qb, noise.amp_damping, false, circuit.n_qubits));
        }
        if (noise.phase_damping > 0.0) {
            rho = apply_kraus(rho, damping_kraus(qa, noise.phase_damping, true, circuit.n_qubits));
            if (qb >= 0) rho = apply_kraus(rho, damping_kraus(qb, noise.phase_damping, true, circuit.n_qubits));
        }
    }
    return rho;
}

/// Random circuit over the full native gate set.
inline qgb::Circuit random_circuit(int n_qubits, int n_gates, qgb::RandomStream& rng,
                                   std::vector<double>& params_out) {
    qgb::Circuit c;
    c.n_qubits = n_qubits;
    params_out.clear();
    int slot = 0;
    for (int i = 0; i < n_gates; ++i) {
        const auto pick = static_cast<int>(rng.uniform_below(n_qubits >= 2 ? 6 : 4));
        const auto q0 = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n_qubits)));
        int q1 = q0;
        if (pick >= 4) {
            while (q1 == q0) q1 = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n_qubits)));
        }
        switch (pick) {
            case 0: c.gates.push_back(qgb::GateOp::h(q0)); break;
            case 1: c.gates.push_back(qgb::GateOp::sx(q0)); break;
            case 2:
                c.gates.push_back(qgb::GateOp::rz(q0, slot++));
                params_out.push_back(rng.uniform(-3.0, 3.0));
                break;
            case 3:
                c.gates.push_back(qgb::GateOp::rx(q0, slot++));
                params_out.push_back(rng.uniform(-3.0, 3.0));
                break;
            case 4: c.gates.push_back(qgb::GateOp::cx(q0, q1)); break;
            default:
                c.gates.push_back(qgb::GateOp::rxx(q0, q1, slot++));
                params_out.push_back(rng.uniform(-3.0, 3.0));
                break;
        }
    }
    c.n_params = slot;
    return c;
}

inline double tv_distance(const qgb::Pmf& a, const qgb::Pmf& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i) acc += std::fabs(a.probs[i] - b.probs[i]);
    return 0.5 * acc;
}

/// Upper chi-square critical value via the Wilson-Hilferty approximation;
/// z is the standard-normal quantile of the desired confidence.
inline double chi2_critical(double df, double z) {
    const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
    return df * t * t * t;
}

inline double chi2_statistic(const qgb::ShotHistogram& hist, const qgb::Pmf& expected) {
    double acc = 0.0;
    for (std::size_t i = 0; i < expected.probs.size(); ++i) {
        const double e = expected.probs[i] * static_cast<double>(hist.n_shots);
        if (e < 1e-12) continue;
        const double d = static_cast<double>(hist.counts[i]) - e;
        acc += d * d / e;
    }
    return acc;
}

}  // namespace oracle
