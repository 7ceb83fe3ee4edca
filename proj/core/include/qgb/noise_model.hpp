#pragma once

#include "qgb/pmf.hpp"

namespace qgb {

/// Channel probabilities attached to circuit execution.
///
/// Readout flips are classical: prepared |0> reads "1" with p01, prepared
/// |1> reads "0" with p10. Depolarizing channels act right after the gate
/// they are attached to; damping channels act after every gate touching
/// the qubit. Single-qubit gates are otherwise noise-free.
struct NoiseModel {
    double p01 = 0.0;
    double p10 = 0.0;
    double p_depol_2q = 0.0;
    double p_depol_1q = 0.0;
    double amp_damping = 0.0;
    double phase_damping = 0.0;

    void validate() const;
    bool has_readout() const { return p01 > 0.0 || p10 > 0.0; }
    /// Anything that requires evolving a mixed state (i.e. not readout).
    bool has_channel_noise() const {
        return p_depol_2q > 0.0 || p_depol_1q > 0.0 || amp_damping > 0.0 || phase_damping > 0.0;
    }
    bool is_noise_free() const { return !has_readout() && !has_channel_noise(); }
};

/// Applies the per-qubit readout confusion matrix
/// [[1-p01, p10], [p01, 1-p10]] as an n-fold tensor product to the PMF.
Pmf confusion_matrix_pmf(const Pmf& pmf, double p01, double p10);

}  // namespace qgb
