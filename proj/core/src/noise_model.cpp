#include "qgb/noise_model.hpp"

#include "qgb/errors.hpp"

namespace qgb {

namespace {

void check_prob(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw validation_error(std::string("noise: ") + name + " outside [0,1]");
}

}  // namespace

void NoiseModel::validate() const {
    check_prob(p01, "p01");
    check_prob(p10, "p10");
    check_prob(p_depol_2q, "p_depol_2q");
    check_prob(p_depol_1q, "p_depol_1q");
    check_prob(amp_damping, "amp_damping");
    check_prob(phase_damping, "phase_damping");
}

Pmf confusion_matrix_pmf(const Pmf& pmf, double p01, double p10) {
    check_prob(p01, "p01");
    check_prob(p10, "p10");
    pmf.validate();
    Pmf out = pmf;
    const int n = out.n_qubits();
    for (int q = 0; q < n; ++q) {
        const std::size_t step = std::size_t{1} << q;
        for (std::size_t base = 0; base < out.probs.size(); base += 2 * step) {
            for (std::size_t i = base; i < base + step; ++i) {
                const double a = out.probs[i];
                const double b = out.probs[i + step];
                out.probs[i] = (1.0 - p01) * a + p10 * b;
                out.probs[i + step] = p01 * a + (1.0 - p10) * b;
            }
        }
    }
    return out;
}

}  // namespace qgb
