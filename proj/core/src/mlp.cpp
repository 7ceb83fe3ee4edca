#include "qgb/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qgb/errors.hpp"

namespace qgb {

AdamOptimizer::AdamOptimizer(std::size_t n_params, double lr, double beta1, double beta2, double eps)
    : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps), m_(n_params, 0.0), v_(n_params, 0.0) {
    if (!(lr > 0.0)) throw validation_error("adam: learning rate must be positive");
}

void AdamOptimizer::step(std::span<double> params, std::span<const double> grad) {
    if (params.size() != m_.size() || grad.size() != m_.size())
        throw validation_error("adam: parameter/gradient size mismatch");
    ++t_;
    const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
        v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
        const double m_hat = m_[i] / bc1;
        const double v_hat = v_[i] / bc2;
        params[i] -= lr_ * m_hat / (std::sqrt(v_hat) + eps_);
    }
}

namespace {

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))); }

double sigmoid(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

MlpDiscriminator::MlpDiscriminator(const std::vector<int>& hidden_widths, RandomStream& rng) {
    sizes_.push_back(2);
    for (const int w : hidden_widths) {
        if (w < 1) throw validation_error("mlp: hidden width must be >= 1");
        sizes_.push_back(w);
    }
    sizes_.push_back(1);
    std::size_t n = 0;
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l)
        n += static_cast<std::size_t>(sizes_[l]) * static_cast<std::size_t>(sizes_[l + 1]) +
             static_cast<std::size_t>(sizes_[l + 1]);
    params_.resize(n);
    std::size_t idx = 0;
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(sizes_[l]));
        const std::size_t n_w = static_cast<std::size_t>(sizes_[l]) * static_cast<std::size_t>(sizes_[l + 1]);
        for (std::size_t i = 0; i < n_w; ++i) params_[idx++] = scale * rng.normal();
        for (int i = 0; i < sizes_[l + 1]; ++i) params_[idx++] = 0.0;
    }
}

double MlpDiscriminator::forward_logit(const std::array<double, 2>& x) const {
    std::vector<double> act(x.begin(), x.end());
    std::vector<double> next;
    std::size_t idx = 0;
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        const int in = sizes_[l];
        const int out = sizes_[l + 1];
        next.assign(static_cast<std::size_t>(out), 0.0);
        const double* w = params_.data() + idx;
        const double* b = w + static_cast<std::size_t>(in) * static_cast<std::size_t>(out);
        for (int o = 0; o < out; ++o) {
            double z = b[o];
            const double* row = w + static_cast<std::size_t>(o) * static_cast<std::size_t>(in);
            for (int i = 0; i < in; ++i) z += row[i] * act[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(o)] = z;
        }
        idx += static_cast<std::size_t>(in) * static_cast<std::size_t>(out) + static_cast<std::size_t>(out);
        if (l + 2 < sizes_.size()) {
            for (double& z : next) z = z > 0.0 ? z : kLeakySlope * z;
        }
        act.swap(next);
    }
    return act[0];
}

double MlpDiscriminator::forward(const std::array<double, 2>& x) const {
    const double s = sigmoid(forward_logit(x));
    return std::clamp(s, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
}

double MlpDiscriminator::backward(std::span<const std::array<double, 2>> batch, std::span<const double> labels,
                                  std::vector<double>& grad) const {
    if (batch.size() != labels.size() || batch.empty())
        throw validation_error("mlp backward: batch/label size mismatch");
    grad.assign(params_.size(), 0.0);
    const std::size_t n_layers = sizes_.size() - 1;
    const double inv_batch = 1.0 / static_cast<double>(batch.size());

    // Per-layer parameter offsets.
    std::vector<std::size_t> offsets(n_layers);
    {
        std::size_t idx = 0;
        for (std::size_t l = 0; l < n_layers; ++l) {
            offsets[l] = idx;
            idx += static_cast<std::size_t>(sizes_[l]) * static_cast<std::size_t>(sizes_[l + 1]) +
                   static_cast<std::size_t>(sizes_[l + 1]);
        }
    }

    double loss = 0.0;
    std::vector<std::vector<double>> pre(n_layers);   // pre-activations
    std::vector<std::vector<double>> act(n_layers + 1);
    std::vector<double> delta, delta_prev;
    for (std::size_t s = 0; s < batch.size(); ++s) {
        act[0].assign(batch[s].begin(), batch[s].end());
        for (std::size_t l = 0; l < n_layers; ++l) {
            const int in = sizes_[l];
            const int out = sizes_[l + 1];
            pre[l].assign(static_cast<std::size_t>(out), 0.0);
            const double* w = params_.data() + offsets[l];
            const double* b = w + static_cast<std::size_t>(in) * static_cast<std::size_t>(out);
            for (int o = 0; o < out; ++o) {
                double z = b[o];
                const double* row = w + static_cast<std::size_t>(o) * static_cast<std::size_t>(in);
                for (int i = 0; i < in; ++i) z += row[i] * act[l][static_cast<std::size_t>(i)];
                pre[l][static_cast<std::size_t>(o)] = z;
            }
            act[l + 1] = pre[l];
            if (l + 1 < n_layers) {
                for (double& z : act[l + 1]) z = z > 0.0 ? z : kLeakySlope * z;
            }
        }
        const double z_out = pre[n_layers - 1][0];
        const double y = labels[s];
        loss += (softplus(z_out) - y * z_out) * inv_batch;
        if (!std::isfinite(loss)) throw std::runtime_error("mlp backward: non-finite loss");

        delta.assign(1, (sigmoid(z_out) - y) * inv_batch);
        for (std::size_t l = n_layers; l-- > 0;) {
            const int in = sizes_[l];
            const int out = sizes_[l + 1];
            double* gw = grad.data() + offsets[l];
            double* gb = gw + static_cast<std::size_t>(in) * static_cast<std::size_t>(out);
            for (int o = 0; o < out; ++o) {
                const double d = delta[static_cast<std::size_t>(o)];
                gb[o] += d;
                double* grow = gw + static_cast<std::size_t>(o) * static_cast<std::size_t>(in);
                for (int i = 0; i < in; ++i) grow[i] += d * act[l][static_cast<std::size_t>(i)];
            }
            if (l == 0) break;
            delta_prev.assign(static_cast<std::size_t>(in), 0.0);
            const double* w = params_.data() + offsets[l];
            for (int o = 0; o < out; ++o) {
                const double d = delta[static_cast<std::size_t>(o)];
                const double* row = w + static_cast<std::size_t>(o) * static_cast<std::size_t>(in);
                for (int i = 0; i < in; ++i) delta_prev[static_cast<std::size_t>(i)] += d * row[i];
            }
            for (int i = 0; i < in; ++i) {
                const double z = pre[l - 1][static_cast<std::size_t>(i)];
                delta_prev[static_cast<std::size_t>(i)] *= z > 0.0 ? 1.0 : kLeakySlope;
            }
            delta.swap(delta_prev);
        }
    }
    return loss;
}

}  // namespace qgb
