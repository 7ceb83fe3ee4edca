#include "qgb/qgan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "qgb/divergence.hpp"
#include "qgb/errors.hpp"
#include "qgb/mlp.hpp"
#include "qgb/pmf.hpp"
#include "qgb/statevector.hpp"

namespace qgb {

void QganConfig::validate() const {
    if (batch_size < 1) throw validation_error("qgan: batch_size must be >= 1");
    if (!(lr_generator > 0.0) || !(lr_discriminator > 0.0))
        throw validation_error("qgan: learning rates must be positive");
    if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) || !(adam_beta2 >= 0.0 && adam_beta2 < 1.0))
        throw validation_error("qgan: adam betas must lie in [0,1)");
    if (!(adam_eps > 0.0)) throw validation_error("qgan: adam_eps must be positive");
    if (max_epochs < 1) throw validation_error("qgan: max_epochs must be >= 1");
    for (const int w : disc_hidden) {
        if (w < 1) throw validation_error("qgan: discriminator widths must be >= 1");
    }
}

namespace {

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))); }

// Mean of -ln D over batch shots drawn from the circuit at the given
// parameters; costs batch executions.
double estimate_generator_loss(const Circuit& circuit, std::span<const double> params,
                               const MlpDiscriminator& disc, int bits_per_dim, std::uint64_t batch,
                               RandomStream& rng) {
    const Pmf pmf = exact_pmf(simulate(circuit, params));
    const ShotHistogram hist = sample_shots(pmf, batch, rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        if (hist.counts[i] == 0) continue;
        const double neg_log_d = softplus(-disc.forward_logit(bin_center(i, bits_per_dim)));
        acc += static_cast<double>(hist.counts[i]) * neg_log_d;
    }
    return acc / static_cast<double>(batch);
}

}  // namespace

TrainResult train_qgan(const Circuit& circuit, const TargetDistribution& target, const QganConfig& cfg,
                       RandomStream& rng) {
    cfg.validate();
    circuit.validate();
    target.pmf.validate();
    if (circuit.n_params < 1) throw validation_error("qgan: circuit has no trainable parameters");
    if (target.n_qubits() != circuit.n_qubits) throw validation_error("qgan: target width mismatch");
    if (target.bits_per_dim < 1)
        throw validation_error("qgan: target has no register geometry for discriminator inputs");

    const auto n_params = static_cast<std::size_t>(circuit.n_params);
    const auto batch = static_cast<std::uint64_t>(cfg.batch_size);
    constexpr double kShift = 1.5707963267948966;  // pi/2

    std::vector<double> theta(n_params);
    for (double& v : theta) v = rng.uniform(-0.1, 0.1);

    MlpDiscriminator disc(cfg.disc_hidden, rng);
    AdamOptimizer adam_d(disc.params().size(), cfg.lr_discriminator, cfg.adam_beta1, cfg.adam_beta2, cfg.adam_eps);
    AdamOptimizer adam_g(n_params, cfg.lr_generator, cfg.adam_beta1, cfg.adam_beta2, cfg.adam_eps);

    const std::vector<double> target_cdf = inclusive_cdf(target.pmf.probs);
    const std::uint64_t per_epoch = (2 * static_cast<std::uint64_t>(n_params) + 1) * batch;

    TrainResult result;
    std::vector<std::array<double, 2>> disc_batch(2 * batch);
    std::vector<double> labels(2 * batch);
    std::vector<double> disc_grad;
    std::vector<double> gen_grad(n_params);
    std::vector<double> shifted(n_params);
    auto last_tick = std::chrono::steady_clock::now();

    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        // Discriminator step: batch real and batch generated samples.
        const Pmf model_pmf = exact_pmf(simulate(circuit, theta));
        const ShotHistogram fake_hist = sample_shots(model_pmf, batch, rng);
        std::size_t slot = 0;
        for (std::uint64_t s = 0; s < batch; ++s, ++slot) {
            disc_batch[slot] = bin_center(sample_index(target_cdf, rng), target.bits_per_dim);
            labels[slot] = 1.0;
        }
        for (std::size_t i = 0; i < fake_hist.counts.size(); ++i) {
            for (std::uint64_t c = 0; c < fake_hist.counts[i]; ++c, ++slot) {
                disc_batch[slot] = bin_center(i, target.bits_per_dim);
                labels[slot] = 0.0;
            }
        }
        const double disc_loss = disc.backward(disc_batch, labels, disc_grad);
        if (!std::isfinite(disc_loss)) throw std::runtime_error("qgan: non-finite discriminator loss");
        adam_d.step(disc.params(), disc_grad);

        // Generator step: parameter-shift estimate of the non-saturating
        // loss gradient, batch shots per shifted circuit.
        for (std::size_t j = 0; j < n_params; ++j) {
            std::copy(theta.begin(), theta.end(), shifted.begin());
            shifted[j] = theta[j] + kShift;
            const double e_plus = estimate_generator_loss(circuit, shifted, disc, target.bits_per_dim, batch, rng);
            shifted[j] = theta[j] - kShift;
            const double e_minus = estimate_generator_loss(circuit, shifted, disc, target.bits_per_dim, batch, rng);
            gen_grad[j] = 0.5 * (e_plus - e_minus);
        }
        adam_g.step(theta, gen_grad);

        const Pmf exact_after = exact_pmf(simulate(circuit, theta));
        const auto now = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_tick).count();
        last_tick = now;
        result.trace.rows.push_back({epoch, static_cast<std::uint64_t>(epoch) * per_epoch,
                                     kl_divergence(target.pmf, exact_after),
                                     kl_divergence(target.pmf, fake_hist.empirical()), ms});
    }
    result.final_params = std::move(theta);
    return result;
}

}  // namespace qgb
