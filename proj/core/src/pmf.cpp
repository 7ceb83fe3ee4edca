#include "qgb/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgb/errors.hpp"

namespace qgb {

Pmf Pmf::uniform(int n_qubits) {
    if (n_qubits < 1) throw validation_error("pmf: n_qubits must be >= 1");
    const std::size_t dim = std::size_t{1} << n_qubits;
    return Pmf{std::vector<double>(dim, 1.0 / static_cast<double>(dim))};
}

int Pmf::n_qubits() const {
    const std::size_t dim = probs.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) throw validation_error("pmf: size is not a power of two");
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    return n;
}

void Pmf::validate(double tol) const {
    n_qubits();
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw validation_error("pmf: negative or non-finite entry");
        total += p;
    }
    if (std::fabs(total - 1.0) > tol)
        throw validation_error("pmf: total " + std::to_string(total) + " not within tolerance of 1");
}

Pmf ShotHistogram::empirical() const {
    if (n_shots == 0) throw validation_error("histogram: empty");
    Pmf out;
    out.probs.resize(counts.size());
    const double inv = 1.0 / static_cast<double>(n_shots);
    for (std::size_t i = 0; i < counts.size(); ++i) out.probs[i] = static_cast<double>(counts[i]) * inv;
    return out;
}

std::vector<double> inclusive_cdf(std::span<const double> probs) {
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    if (!cdf.empty()) cdf.back() = acc;  // searches never fall off the end
    return cdf;
}

std::size_t sample_index(std::span<const double> cdf, RandomStream& rng) {
    const double u = rng.uniform01() * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
}

ShotHistogram sample_shots(const Pmf& pmf, std::uint64_t n_shots, RandomStream& rng) {
    if (n_shots == 0) throw validation_error("sample_shots: n_shots must be >= 1");
    const std::size_t bins = pmf.probs.size();
    ShotHistogram hist;
    hist.counts.assign(bins, 0);
    hist.n_shots = n_shots;

    if (n_shots < bins) {
        const std::vector<double> cdf = inclusive_cdf(pmf.probs);
        for (std::uint64_t s = 0; s < n_shots; ++s) ++hist.counts[sample_index(cdf, rng)];
        return hist;
    }

    // Conditional-binomial decomposition of the multinomial.
    std::uint64_t remaining = n_shots;
    double mass_left = 1.0;
    for (std::size_t i = 0; i + 1 < bins && remaining > 0; ++i) {
        const double p = pmf.probs[i];
        double ratio = mass_left > 0.0 ? p / mass_left : 1.0;
        ratio = std::clamp(ratio, 0.0, 1.0);
        const std::uint64_t draw = rng.binomial(remaining, ratio);
        hist.counts[i] = draw;
        remaining -= draw;
        mass_left -= p;
    }
    hist.counts[bins - 1] += remaining;
    return hist;
}

}  // namespace qgb
