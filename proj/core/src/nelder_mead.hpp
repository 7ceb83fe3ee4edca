#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qgb::detail {

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int iterations = 0;
};

/// Downhill simplex with the standard 1/2/0.5/0.5 coefficients. The
/// objective may return +inf to encode constraint barriers; the initial
/// point must be feasible. Stops when the simplex collapses in both f and
/// x or the iteration budget runs out.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, std::span<const double> initial_step, int max_iterations,
                             double f_tol, double x_tol);

}  // namespace qgb::detail
