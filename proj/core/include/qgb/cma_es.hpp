#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qgb/rng.hpp"

namespace qgb {

struct CmaesHistoryRow {
    int generation = 0;  // 1-based
    double best_f = 0.0; // best objective value within the generation
};

struct CmaesResult {
    std::vector<double> best_x;  // best candidate ever evaluated
    double best_f = 0.0;
    std::vector<CmaesHistoryRow> history;
    std::int64_t n_evaluations = 0;  // exactly lambda * generations
};

/// Invoked after each generation with the generation-best candidate and
/// its index within the generation's evaluation order.
using CmaesCallback =
    std::function<void(int generation, std::span<const double> best_x, double best_f, int best_index)>;

/// (mu/mu_w, lambda) covariance matrix adaptation evolution strategy with
/// rank-one and rank-mu covariance updates and cumulative step-size
/// control; weights, learning rates and damping follow the standard
/// published defaults. Exactly lambda objective evaluations per
/// generation, in candidate order. Throws on a non-finite objective value.
CmaesResult cma_es_minimize(const std::function<double(std::span<const double>)>& objective,
                            std::span<const double> x0, double sigma0, int lambda, int max_generations,
                            RandomStream& rng, const CmaesCallback& on_generation = {});

}  // namespace qgb
