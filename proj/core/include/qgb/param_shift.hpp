#pragma once

#include <span>
#include <vector>

#include "qgb/backend.hpp"
#include "qgb/circuit.hpp"

namespace qgb {

/// Exact derivative of the backend PMF with respect to parameter j via
/// the parameter-shift rule: every gate bound to slot j contributes
/// (q(theta_g + pi/2) - q(theta_g - pi/2)) / 2 with only that occurrence
/// shifted. Valid for the exp(-i theta G / 2), G^2 = I rotation kinds
/// (RZ, RX, RXX). Entries sum to zero.
std::vector<double> pmf_param_shift_grad(const Circuit& circuit, std::span<const double> params, int param_index,
                                         const BackendSpec& backend = {});

}  // namespace qgb
