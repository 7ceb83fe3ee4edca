#include "qgb/qcbm.hpp"

#include <chrono>
#include <utility>

#include "qgb/cma_es.hpp"
#include "qgb/divergence.hpp"
#include "qgb/errors.hpp"
#include "qgb/trajectory.hpp"

namespace qgb {

void QcbmConfig::validate() const {
    if (population < 2) throw validation_error("qcbm: population must be >= 2");
    if (n_shots < 1) throw validation_error("qcbm: n_shots must be >= 1");
    if (!(sigma0 > 0.0)) throw validation_error("qcbm: sigma0 must be positive");
    if (max_generations < 1) throw validation_error("qcbm: max_generations must be >= 1");
}

TrainResult train_qcbm(const Circuit& circuit, const TargetDistribution& target, const QcbmConfig& cfg,
                       const BackendSpec& backend, RandomStream& rng) {
    cfg.validate();
    circuit.validate();
    validate_backend(backend, circuit.n_qubits);
    target.pmf.validate();
    if (circuit.n_params < 1) throw validation_error("qcbm: circuit has no trainable parameters");
    if (target.n_qubits() != circuit.n_qubits) throw validation_error("qcbm: target width mismatch");

    std::vector<double> x0(static_cast<std::size_t>(circuit.n_params));
    for (double& v : x0) v = rng.uniform(-0.1, 0.1);

    const bool trajectory = backend.mode == BackendMode::Trajectory;
    const auto lambda = static_cast<std::size_t>(cfg.population);
    std::vector<Pmf> generation_pmfs(trajectory ? 0 : lambda);
    std::size_t eval_index = 0;

    auto objective = [&](std::span<const double> x) -> double {
        ShotHistogram hist;
        if (trajectory) {
            hist = trajectory_histogram(circuit, x, backend.noise, cfg.n_shots, rng);
        } else {
            Pmf exact = exact_backend_pmf(circuit, x, backend);
            hist = sample_shots(exact, cfg.n_shots, rng);
            generation_pmfs[eval_index % lambda] = std::move(exact);
        }
        ++eval_index;
        return kl_divergence(target.pmf, hist.empirical());
    };

    TrainResult result;
    const std::uint64_t per_generation = static_cast<std::uint64_t>(cfg.population) * cfg.n_shots;
    auto last_tick = std::chrono::steady_clock::now();

    auto on_generation = [&](int gen, std::span<const double> best_x, double best_f, int best_index) {
        Pmf traj_exact;
        if (trajectory) traj_exact = exact_backend_pmf(circuit, best_x, backend);
        const Pmf& exact = trajectory ? traj_exact : generation_pmfs[static_cast<std::size_t>(best_index)];
        const auto now = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_tick).count();
        last_tick = now;
        result.trace.rows.push_back({gen, static_cast<std::uint64_t>(gen) * per_generation,
                                     kl_divergence(target.pmf, exact), best_f, ms});
    };

    CmaesResult opt =
        cma_es_minimize(objective, x0, cfg.sigma0, cfg.population, cfg.max_generations, rng, on_generation);
    result.final_params = std::move(opt.best_x);
    return result;
}

}  // namespace qgb
