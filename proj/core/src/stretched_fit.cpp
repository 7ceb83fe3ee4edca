#include "qgb/stretched_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nelder_mead.hpp"
#include "qgb/errors.hpp"

namespace qgb {

double stretched_exponential(double x, const FitResult& fit) {
    return fit.alpha * std::exp(-fit.beta * std::pow(x, fit.gamma)) + fit.c_conv;
}

namespace {

constexpr double kGammaMax = 1.5;
constexpr double kGammaMin = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Series {
    std::span<const double> y;
    std::vector<double> log_x;

    double sse(double alpha, double beta, double gamma, double c) const {
        if (beta < 0.0 || gamma <= kGammaMin || gamma > kGammaMax || c < 0.0) return kInf;
        double acc = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double r = alpha * std::exp(-beta * std::exp(gamma * log_x[i])) + c - y[i];
            acc += r * r;
        }
        return acc;
    }

    // Least-squares (alpha, c) for fixed (beta, gamma); c clamped to >= 0.
    void solve_linear(double beta, double gamma, double& alpha, double& c) const {
        const double n = static_cast<double>(y.size());
        double se = 0.0, see = 0.0, sy = 0.0, sey = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double e = std::exp(-beta * std::exp(gamma * log_x[i]));
            se += e;
            see += e * e;
            sy += y[i];
            sey += e * y[i];
        }
        const double det = n * see - se * se;
        if (std::fabs(det) < 1e-14 * (n * see + se * se + 1e-300)) {
            alpha = 0.0;
            c = sy / n;
            return;
        }
        alpha = (n * sey - se * sy) / det;
        c = (sy * see - se * sey) / det;
        if (c < 0.0) {
            c = 0.0;
            alpha = see > 0.0 ? sey / see : 0.0;
        }
    }
};

struct Candidate {
    double alpha, beta, gamma, c, sse;
};

}  // namespace

FitResult fit_stretched_exponential(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw validation_error("fit: x/y length mismatch");
    if (x.size() < 8) throw validation_error("fit: need at least 8 points");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0)) throw validation_error("fit: x must be positive");
        if (i > 0 && !(x[i] > x[i - 1])) throw validation_error("fit: x must be strictly increasing");
        if (!std::isfinite(y[i])) throw validation_error("fit: non-finite y value");
    }

    const bool constant = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (constant) return FitResult{0.0, 0.0, 1.0, std::max(y[0], 0.0), 0.0};

    Series series;
    series.y = y;
    series.log_x.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) series.log_x[i] = std::log(x[i]);
    const double log_x_max = series.log_x.back();

    // Grid seeds: gamma log-spaced over its range, and beta chosen so the
    // decay at x_max spans "barely started" to "fully finished".
    std::vector<Candidate> seeds;
    constexpr int kGrid = 20;
    for (int gi = 0; gi < kGrid; ++gi) {
        const double gamma =
            std::exp(std::log(0.05) + (std::log(kGammaMax) - std::log(0.05)) * gi / double(kGrid - 1));
        for (int si = 0; si < kGrid; ++si) {
            const double s = std::exp(std::log(1e-3) + (std::log(1e3) - std::log(1e-3)) * si / double(kGrid - 1));
            const double beta = s * std::exp(-gamma * log_x_max);
            double alpha = 0.0, c = 0.0;
            series.solve_linear(beta, gamma, alpha, c);
            seeds.push_back({alpha, beta, gamma, c, series.sse(alpha, beta, gamma, c)});
        }
    }
    std::sort(seeds.begin(), seeds.end(), [](const Candidate& a, const Candidate& b) { return a.sse < b.sse; });

    auto objective = [&](std::span<const double> p) { return series.sse(p[0], p[1], p[2], p[3]); };

    Candidate best = seeds.front();
    const std::size_t n_refine = std::min<std::size_t>(3, seeds.size());
    for (std::size_t k = 0; k < n_refine; ++k) {
        const Candidate& seed = seeds[k];
        const double p0[4] = {seed.alpha, seed.beta, seed.gamma, seed.c};
        const double step[4] = {0.1 * std::fabs(seed.alpha) + 1e-4, 0.3 * seed.beta + 1e-30,
                                std::min(0.05, (kGammaMax - seed.gamma) * 0.5 + 1e-6),
                                0.1 * std::fabs(seed.c) + 1e-4};
        const auto refined = detail::nelder_mead(objective, p0, step, 4000, 1e-15, 0.0);
        Candidate cand{refined.x[0], refined.x[1], refined.x[2], refined.x[3], refined.f};
        // Polish the linear pair at the refined (beta, gamma).
        double alpha = 0.0, c = 0.0;
        series.solve_linear(cand.beta, cand.gamma, alpha, c);
        const double polished = series.sse(alpha, cand.beta, cand.gamma, c);
        if (polished < cand.sse) cand = {alpha, cand.beta, cand.gamma, c, polished};
        if (cand.sse < best.sse) best = cand;
    }

    FitResult fit{best.alpha, best.beta, best.gamma, best.c, 0.0};
    fit.residual_rms = std::sqrt(best.sse / static_cast<double>(y.size()));
    return fit;
}

}  // namespace qgb
