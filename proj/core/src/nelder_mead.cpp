#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qgb/errors.hpp"

namespace qgb::detail {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, std::span<const double> initial_step, int max_iterations,
                             double f_tol, double x_tol) {
    const std::size_t dim = x0.size();
    if (dim == 0 || initial_step.size() != dim) throw validation_error("nelder_mead: bad start point");

    std::vector<std::vector<double>> simplex(dim + 1, std::vector<double>(x0.begin(), x0.end()));
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += initial_step[i];
    for (std::size_t i = 0; i <= dim; ++i) values[i] = f(simplex[i]);
    if (!std::isfinite(values[0])) throw validation_error("nelder_mead: infeasible start point");

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    NelderMeadResult result;

    for (int iter = 0; iter < max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order[0], worst = order[dim], second_worst = order[dim - 1];

        double x_spread = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            x_spread = std::max(x_spread, std::fabs(simplex[worst][i] - simplex[best][i]));
        const double f_spread = std::fabs(values[worst] - values[best]);
        const double f_scale = std::fabs(values[best]) + std::fabs(values[worst]) + 1e-300;
        result.iterations = iter;
        if (f_spread <= f_tol * f_scale && x_spread <= x_tol) break;

        centroid.assign(dim, 0.0);
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k][i];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](std::vector<double>& dst, double coeff) {
            for (std::size_t i = 0; i < dim; ++i) dst[i] = centroid[i] + coeff * (simplex[worst][i] - centroid[i]);
        };

        blend(trial, -1.0);  // reflection
        const double f_reflect = f(trial);
        if (f_reflect < values[best]) {
            blend(trial2, -2.0);  // expansion
            const double f_expand = f(trial2);
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                values[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                values[worst] = f_reflect;
            }
        } else if (f_reflect < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = f_reflect;
        } else {
            const bool outside = f_reflect < values[worst];
            blend(trial2, outside ? -0.5 : 0.5);  // contraction
            const double f_contract = f(trial2);
            if (f_contract < std::min(f_reflect, values[worst])) {
                simplex[worst] = trial2;
                values[worst] = f_contract;
            } else {
                for (std::size_t k = 0; k <= dim; ++k) {  // shrink toward best
                    if (k == best) continue;
                    for (std::size_t i = 0; i < dim; ++i)
                        simplex[k][i] = simplex[best][i] + 0.5 * (simplex[k][i] - simplex[best][i]);
                    values[k] = f(simplex[k]);
                }
            }
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.f = values[best];
    return result;
}

}  // namespace qgb::detail
