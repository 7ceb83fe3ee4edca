#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "qgb/pmf.hpp"

namespace qgb {

enum class TransformKind { MinMax, PIT };

const char* transform_name(TransformKind kind);
TransformKind transform_from_name(std::string_view name);

/// Two-dimensional point cloud; all experiments use d = 2.
struct ContinuousDataset {
    std::vector<std::array<double, 2>> points;
    std::uint64_t seed = 0;
};

/// Discrete training target over 2^n bins. For continuous sources each
/// data dimension owns one register of bits_per_dim qubits: dimension 0
/// sits in the low bits of the outcome index, dimension 1 in the high
/// bits. Parity targets with odd n have no register geometry
/// (bits_per_dim = 0).
struct TargetDistribution {
    Pmf pmf;
    int bits_per_dim = 0;
    TransformKind transform = TransformKind::PIT;

    int n_qubits() const { return pmf.n_qubits(); }
};

/// Points on the two unit-square diagonals ("X" shape): u uniform, a fair
/// coin picks (u, u) or (u, 1-u), then isotropic Gaussian jitter, clipped
/// to [0,1]^2.
ContinuousDataset generate_x_dataset(std::size_t n_points, double jitter_std, std::uint64_t seed);

/// Per-dimension x -> (x - min) / (max - min). Fails on a constant
/// coordinate.
ContinuousDataset minmax_transform(const ContinuousDataset& ds);

/// Probability integral transform: per dimension, x -> rank(x) / N with
/// ranks 1..N and ties broken by original index. Marginals land exactly
/// on the grid {1/N, ..., 1}.
ContinuousDataset pit_transform(const ContinuousDataset& ds);

/// Joint histogram over 2^(n/2) equal-width bins per dimension;
/// coordinate 1.0 falls in the top bin. Coordinates must lie in [0,1].
TargetDistribution discretize(const ContinuousDataset& ds, int n_qubits, TransformKind transform);

/// Uniform PMF over all length-n bitstrings of the given parity.
TargetDistribution generate_parity_dataset(int n_qubits, int parity);

/// Center of the bin addressed by a PMF index, per the register layout.
std::array<double, 2> bin_center(std::uint64_t index, int bits_per_dim);

void write_dataset_csv(const std::filesystem::path& path, const ContinuousDataset& ds);
void write_pmf_csv(const std::filesystem::path& path, const Pmf& pmf);

}  // namespace qgb
