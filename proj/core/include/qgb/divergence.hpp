#pragma once

#include "qgb/pmf.hpp"

namespace qgb {

/// Floor applied to estimated probabilities inside the KL sum; keeps the
/// objective finite when the estimate has empty bins. Recorded in run
/// metadata.
inline constexpr double kKlFloor = 1e-8;

/// sum_{i : p_i > 0} p_i * ln(p_i / max(q_i, floor)), natural log.
double kl_divergence(const Pmf& p, const Pmf& q, double floor = kKlFloor);

/// KL divergence between p and the uniform distribution; the score of
/// uninformed guessing.
double random_baseline(const Pmf& p);

/// Shannon entropy in nats.
double entropy(const Pmf& p);

}  // namespace qgb
