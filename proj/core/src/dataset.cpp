#include "qgb/dataset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "qgb/errors.hpp"
#include "util.hpp"

namespace qgb {

const char* transform_name(TransformKind kind) {
    return kind == TransformKind::MinMax ? "minmax" : "pit";
}

TransformKind transform_from_name(std::string_view name) {
    if (name == "minmax") return TransformKind::MinMax;
    if (name == "pit") return TransformKind::PIT;
    throw validation_error("unknown transform '" + std::string(name) + "'");
}

ContinuousDataset generate_x_dataset(std::size_t n_points, double jitter_std, std::uint64_t seed) {
    if (n_points < 1) throw validation_error("x dataset: n_points must be >= 1");
    if (!(jitter_std >= 0.0)) throw validation_error("x dataset: jitter_std must be >= 0");
    RandomStream rng(seed);
    ContinuousDataset ds;
    ds.seed = seed;
    ds.points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double u = rng.uniform01();
        const bool anti = rng.uniform01() < 0.5;
        double x = u;
        double y = anti ? 1.0 - u : u;
        if (jitter_std > 0.0) {
            x += jitter_std * rng.normal();
            y += jitter_std * rng.normal();
        }
        ds.points.push_back({std::clamp(x, 0.0, 1.0), std::clamp(y, 0.0, 1.0)});
    }
    return ds;
}

ContinuousDataset minmax_transform(const ContinuousDataset& ds) {
    if (ds.points.empty()) throw validation_error("minmax: empty dataset");
    ContinuousDataset out = ds;
    for (int d = 0; d < 2; ++d) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& p : ds.points) {
            lo = std::min(lo, p[static_cast<std::size_t>(d)]);
            hi = std::max(hi, p[static_cast<std::size_t>(d)]);
        }
        if (!(hi > lo)) throw validation_error("minmax: dimension " + std::to_string(d) + " is constant");
        const double inv = 1.0 / (hi - lo);
        for (auto& p : out.points) {
            p[static_cast<std::size_t>(d)] = (p[static_cast<std::size_t>(d)] - lo) * inv;
        }
    }
    return out;
}

ContinuousDataset pit_transform(const ContinuousDataset& ds) {
    if (ds.points.empty()) throw validation_error("pit: empty dataset");
    const std::size_t n = ds.points.size();
    ContinuousDataset out = ds;
    std::vector<std::size_t> order(n);
    for (int d = 0; d < 2; ++d) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double va = ds.points[a][static_cast<std::size_t>(d)];
            const double vb = ds.points[b][static_cast<std::size_t>(d)];
            return va < vb || (va == vb && a < b);
        });
        for (std::size_t rank = 0; rank < n; ++rank) {
            out.points[order[rank]][static_cast<std::size_t>(d)] =
                static_cast<double>(rank + 1) / static_cast<double>(n);
        }
    }
    return out;
}

TargetDistribution discretize(const ContinuousDataset& ds, int n_qubits, TransformKind transform) {
    if (ds.points.empty()) throw validation_error("discretize: empty dataset");
    if (n_qubits < 2 || n_qubits % 2 != 0) throw validation_error("discretize: n_qubits must be even and >= 2");
    const int m = n_qubits / 2;
    const std::uint64_t bins_per_dim = std::uint64_t{1} << m;
    TargetDistribution target;
    target.bits_per_dim = m;
    target.transform = transform;
    target.pmf.probs.assign(std::size_t{1} << n_qubits, 0.0);
    const double weight = 1.0 / static_cast<double>(ds.points.size());
    for (const auto& p : ds.points) {
        std::uint64_t b[2];
        for (int d = 0; d < 2; ++d) {
            const double v = p[static_cast<std::size_t>(d)];
            if (!(v >= 0.0 && v <= 1.0)) throw validation_error("discretize: coordinate outside [0,1]");
            b[d] = std::min<std::uint64_t>(static_cast<std::uint64_t>(v * static_cast<double>(bins_per_dim)),
                                           bins_per_dim - 1);
        }
        target.pmf.probs[b[0] | (b[1] << m)] += weight;
    }
    return target;
}

TargetDistribution generate_parity_dataset(int n_qubits, int parity) {
    if (n_qubits < 1) throw validation_error("parity dataset: n_qubits must be >= 1");
    if (parity != 0 && parity != 1) throw validation_error("parity dataset: parity must be 0 or 1");
    TargetDistribution target;
    target.bits_per_dim = n_qubits % 2 == 0 ? n_qubits / 2 : 0;
    const std::size_t dim = std::size_t{1} << n_qubits;
    target.pmf.probs.assign(dim, 0.0);
    const double p = n_qubits == 1 ? 1.0 : 2.0 / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::popcount(i) % 2 == parity) target.pmf.probs[i] = p;
    }
    return target;
}

std::array<double, 2> bin_center(std::uint64_t index, int bits_per_dim) {
    if (bits_per_dim < 1) throw validation_error("bin_center: target has no register geometry");
    const std::uint64_t mask = (std::uint64_t{1} << bits_per_dim) - 1;
    const double scale = 1.0 / static_cast<double>(std::uint64_t{1} << bits_per_dim);
    const auto b0 = static_cast<double>(index & mask);
    const auto b1 = static_cast<double>((index >> bits_per_dim) & mask);
    return {(b0 + 0.5) * scale, (b1 + 0.5) * scale};
}

void write_dataset_csv(const std::filesystem::path& path, const ContinuousDataset& ds) {
    std::ostringstream out;
    out << "x,y\n";
    for (const auto& p : ds.points) out << util::format_double(p[0]) << ',' << util::format_double(p[1]) << '\n';
    util::write_text_file_atomic(path.string(), out.str());
}

void write_pmf_csv(const std::filesystem::path& path, const Pmf& pmf) {
    std::ostringstream out;
    out << "index,probability\n";
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) out << i << ',' << util::format_double(pmf.probs[i]) << '\n';
    util::write_text_file_atomic(path.string(), out.str());
}

}  // namespace qgb
