#include "qgb/cma_es.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "qgb/errors.hpp"

namespace qgb {

CmaesResult cma_es_minimize(const std::function<double(std::span<const double>)>& objective,
                            std::span<const double> x0, double sigma0, int lambda, int max_generations,
                            RandomStream& rng, const CmaesCallback& on_generation) {
    const int dim = static_cast<int>(x0.size());
    if (dim < 1) throw validation_error("cma_es: empty start point");
    if (lambda < 2) throw validation_error("cma_es: lambda must be >= 2");
    if (!(sigma0 > 0.0)) throw validation_error("cma_es: sigma0 must be positive");
    if (max_generations < 1) throw validation_error("cma_es: max_generations must be >= 1");

    const int mu = lambda / 2;
    Eigen::VectorXd weights(mu);
    for (int i = 0; i < mu; ++i) weights[i] = std::log((lambda + 1) / 2.0) - std::log(i + 1.0);
    weights /= weights.sum();
    const double mu_eff = 1.0 / weights.squaredNorm();

    const double nd = dim;
    const double c_sigma = (mu_eff + 2.0) / (nd + mu_eff + 5.0);
    const double d_sigma = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (nd + 1.0)) - 1.0) + c_sigma;
    const double c_c = (4.0 + mu_eff / nd) / (nd + 4.0 + 2.0 * mu_eff / nd);
    const double c_1 = 2.0 / ((nd + 1.3) * (nd + 1.3) + mu_eff);
    const double c_mu =
        std::min(1.0 - c_1, 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((nd + 2.0) * (nd + 2.0) + mu_eff));
    const double chi_n = std::sqrt(nd) * (1.0 - 1.0 / (4.0 * nd) + 1.0 / (21.0 * nd * nd));

    Eigen::VectorXd mean = Eigen::Map<const Eigen::VectorXd>(x0.data(), dim);
    double sigma = sigma0;
    Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::VectorXd path_sigma = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd path_c = Eigen::VectorXd::Zero(dim);

    CmaesResult result;
    result.best_f = std::numeric_limits<double>::infinity();
    result.history.reserve(static_cast<std::size_t>(max_generations));

    std::vector<Eigen::VectorXd> zs(static_cast<std::size_t>(lambda));
    std::vector<Eigen::VectorXd> ys(static_cast<std::size_t>(lambda));
    std::vector<Eigen::VectorXd> xs(static_cast<std::size_t>(lambda));
    std::vector<double> fs(static_cast<std::size_t>(lambda));
    std::vector<int> order(static_cast<std::size_t>(lambda));
    std::vector<double> candidate(static_cast<std::size_t>(dim));

    for (int gen = 1; gen <= max_generations; ++gen) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
        if (eig.info() != Eigen::Success) throw std::runtime_error("cma_es: eigendecomposition failed");
        const Eigen::MatrixXd basis = eig.eigenvectors();
        Eigen::VectorXd scale = eig.eigenvalues();
        for (int i = 0; i < dim; ++i) scale[i] = std::sqrt(std::max(scale[i], 1e-30));

        for (int k = 0; k < lambda; ++k) {
            Eigen::VectorXd z(dim);
            for (int i = 0; i < dim; ++i) z[i] = rng.normal();
            zs[static_cast<std::size_t>(k)] = z;
            ys[static_cast<std::size_t>(k)] = basis * (scale.asDiagonal() * z);
            xs[static_cast<std::size_t>(k)] = mean + sigma * ys[static_cast<std::size_t>(k)];
            const Eigen::VectorXd& x = xs[static_cast<std::size_t>(k)];
            Eigen::Map<Eigen::VectorXd>(candidate.data(), dim) = x;
            const double f = objective(candidate);
            if (!std::isfinite(f)) throw std::runtime_error("cma_es: objective returned a non-finite value");
            fs[static_cast<std::size_t>(k)] = f;
            ++result.n_evaluations;
            if (f < result.best_f) {
                result.best_f = f;
                result.best_x.assign(x.data(), x.data() + dim);
            }
        }

        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fs[static_cast<std::size_t>(a)] < fs[static_cast<std::size_t>(b)]; });
        const int gen_best = order[0];
        result.history.push_back({gen, fs[static_cast<std::size_t>(gen_best)]});

        Eigen::VectorXd y_w = Eigen::VectorXd::Zero(dim);
        Eigen::VectorXd z_w = Eigen::VectorXd::Zero(dim);
        for (int i = 0; i < mu; ++i) {
            y_w += weights[i] * ys[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            z_w += weights[i] * zs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        }
        mean += sigma * y_w;

        // C^{-1/2} y_w = B z_w
        path_sigma = (1.0 - c_sigma) * path_sigma + std::sqrt(c_sigma * (2.0 - c_sigma) * mu_eff) * (basis * z_w);
        const double ps_norm = path_sigma.norm();
        const double expected =
            std::sqrt(1.0 - std::pow(1.0 - c_sigma, 2.0 * gen));
        const bool h_sigma = ps_norm / expected / chi_n < 1.4 + 2.0 / (nd + 1.0);
        path_c = (1.0 - c_c) * path_c;
        if (h_sigma) path_c += std::sqrt(c_c * (2.0 - c_c) * mu_eff) * y_w;

        Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < mu; ++i) {
            const Eigen::VectorXd& y = ys[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            rank_mu.noalias() += weights[i] * (y * y.transpose());
        }
        const double c1a = c_1 * (h_sigma ? 1.0 : 1.0 - c_c * (2.0 - c_c));
        cov = (1.0 - c1a - c_mu) * cov + c_1 * (path_c * path_c.transpose()) + c_mu * rank_mu;
        cov = 0.5 * (cov + cov.transpose().eval());

        sigma *= std::exp((c_sigma / d_sigma) * (ps_norm / chi_n - 1.0));

        if (on_generation) {
            const Eigen::VectorXd& xb = xs[static_cast<std::size_t>(gen_best)];
            const std::vector<double> best_x(xb.data(), xb.data() + dim);
            on_generation(gen, best_x, fs[static_cast<std::size_t>(gen_best)], gen_best);
        }
    }
    return result;
}

}  // namespace qgb
