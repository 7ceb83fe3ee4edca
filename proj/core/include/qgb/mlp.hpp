#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qgb/rng.hpp"

namespace qgb {

/// Adam with bias-corrected first and second moments over a flat
/// parameter vector.
class AdamOptimizer {
public:
    AdamOptimizer(std::size_t n_params, double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

    void step(std::span<double> params, std::span<const double> grad);

private:
    double lr_, beta1_, beta2_, eps_;
    std::int64_t t_ = 0;
    std::vector<double> m_, v_;
};

/// Binary classifier on d = 2 inputs: leaky-rectifier hidden layers
/// (slope 0.2) and one logistic output unit. All weights and biases live
/// in a single flat vector, so one AdamOptimizer covers the whole net.
class MlpDiscriminator {
public:
    /// Weights are scaled-normal (std 1/sqrt(fan_in)), biases zero.
    MlpDiscriminator(const std::vector<int>& hidden_widths, RandomStream& rng);

    double forward_logit(const std::array<double, 2>& x) const;
    /// Logistic of the output unit; strictly inside (0,1).
    double forward(const std::array<double, 2>& x) const;

    /// Mean binary cross-entropy over the batch; exact gradients are
    /// accumulated into grad (resized and zeroed here).
    double backward(std::span<const std::array<double, 2>> batch, std::span<const double> labels,
                    std::vector<double>& grad) const;

    std::span<double> params() { return params_; }
    std::span<const double> params() const { return params_; }
    const std::vector<int>& layer_sizes() const { return sizes_; }

    static constexpr double kLeakySlope = 0.2;

private:
    std::vector<int> sizes_;  // [2, hidden..., 1]
    std::vector<double> params_;
};

}  // namespace qgb
