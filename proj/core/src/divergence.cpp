#include "qgb/divergence.hpp"

#include <cmath>

#include "qgb/errors.hpp"

namespace qgb {

double kl_divergence(const Pmf& p, const Pmf& q, double floor) {
    if (p.probs.size() != q.probs.size()) throw validation_error("kl_divergence: length mismatch");
    if (!(floor > 0.0)) throw validation_error("kl_divergence: floor must be positive");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        const double pi = p.probs[i];
        if (pi > 0.0) acc += pi * std::log(pi / std::max(q.probs[i], floor));
    }
    return acc;
}

double random_baseline(const Pmf& p) { return kl_divergence(p, Pmf::uniform(p.n_qubits()), kKlFloor); }

double entropy(const Pmf& p) {
    double acc = 0.0;
    for (const double pi : p.probs) {
        if (pi > 0.0) acc -= pi * std::log(pi);
    }
    return acc;
}

}  // namespace qgb
