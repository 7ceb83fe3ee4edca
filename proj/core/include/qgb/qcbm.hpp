#pragma once

#include <cstdint>

#include "qgb/backend.hpp"
#include "qgb/circuit.hpp"
#include "qgb/dataset.hpp"
#include "qgb/rng.hpp"
#include "qgb/trace.hpp"

namespace qgb {

struct QcbmConfig {
    int population = 5;              // CMA-ES lambda
    std::uint64_t n_shots = 10'000;  // per objective evaluation
    double sigma0 = 0.5;
    int max_generations = 1000;

    void validate() const;
};

/// Trains the circuit as a Born machine: CMA-ES minimizes the KL
/// divergence between the target PMF and a shot-estimated model PMF on
/// the selected backend. One epoch is one CMA-ES generation, so
/// cumulative executions after G generations are exactly
/// G * population * n_shots. Circuit parameters start uniform in
/// [-0.1, 0.1].
TrainResult train_qcbm(const Circuit& circuit, const TargetDistribution& target, const QcbmConfig& cfg,
                       const BackendSpec& backend, RandomStream& rng);

}  // namespace qgb
