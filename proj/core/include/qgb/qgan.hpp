#pragma once

#include <vector>

#include "qgb/circuit.hpp"
#include "qgb/dataset.hpp"
#include "qgb/rng.hpp"
#include "qgb/trace.hpp"

namespace qgb {

struct QganConfig {
    int batch_size = 20;  // shots per circuit execution step
    double lr_generator = 1e-2;
    double lr_discriminator = 1e-3;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::vector<int> disc_hidden = {32, 16};
    int max_epochs = 1000;

    void validate() const;
};

/// Adversarial training of the circuit against an MLP discriminator on
/// bin-center coordinates; noise-free statevector execution only.
///
/// Each epoch alternates: (1) discriminator Adam step on binary
/// cross-entropy over batch_size real and batch_size generated samples
/// (one circuit execution of batch_size shots); (2) generator Adam step
/// on the non-saturating loss E[-ln D(x)], each parameter's gradient
/// estimated as (E+ - E-)/2 from batch_size shots of the +-pi/2 shifted
/// circuit. Cumulative executions grow by exactly
/// (2 * n_params + 1) * batch_size per epoch.
TrainResult train_qgan(const Circuit& circuit, const TargetDistribution& target, const QganConfig& cfg,
                       RandomStream& rng);

}  // namespace qgb
