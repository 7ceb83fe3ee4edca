#pragma once

#include <span>

namespace qgb {

/// Parameters of the convergence-curve model
/// f(x) = alpha * exp(-beta * x^gamma) + c_conv.
struct FitResult {
    double alpha = 0.0;
    double beta = 0.0;       // >= 0
    double gamma = 1.0;      // in (0, 1.5]
    double c_conv = 0.0;     // >= 0; the converged-KL asymptote
    double residual_rms = 0.0;
};

double stretched_exponential(double x, const FitResult& fit);

/// Least-squares fit of the stretched exponential to a series of at
/// least 8 points with strictly increasing positive x. Seeds come from a
/// 20x20 log-spaced (beta, gamma) grid with (alpha, c_conv) solved
/// linearly at each node; the best seeds are refined with Nelder-Mead
/// over all four parameters under the bound constraints. A constant
/// series yields alpha = 0 with c_conv at the common value.
FitResult fit_stretched_exponential(std::span<const double> x, std::span<const double> y);

}  // namespace qgb
