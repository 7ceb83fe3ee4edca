#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgb/aggregate.hpp"
#include "qgb/backend.hpp"
#include "qgb/dataset.hpp"
#include "qgb/qcbm.hpp"
#include "qgb/qgan.hpp"

namespace qgb {

enum class DatasetKind { XShape, Parity };
enum class TrainingMethod { Qcbm, Qgan, Inference };

const char* dataset_kind_name(DatasetKind kind);
const char* training_method_name(TrainingMethod method);

struct DatasetSpec {
    DatasetKind kind = DatasetKind::XShape;
    std::uint64_t n_points = 100'000;
    double jitter_std = 0.05;
    std::uint64_t seed = 7;
    int parity = 0;
};

/// One swept backend field and the values to materialize.
struct SweepSpec {
    std::string parameter;  // backend.readout | backend.p_depol_2q | ... | backend.n_shots
    std::vector<double> values;
};

/// Fully resolved benchmarking instance: defaults applied, profile noise
/// merged. Parsed from the nested `section.key = value` text format.
struct BenchmarkConfig {
    int n_qubits = 0;
    int repetitions = 1;
    std::uint64_t master_seed = 0;

    DatasetSpec dataset;
    TransformKind transform = TransformKind::PIT;
    int circuit_depth = 1;

    BackendMode backend_mode = BackendMode::Statevector;
    std::optional<std::string> profile_path;
    NoiseModel noise;
    std::uint64_t n_shots = 10'000;

    TrainingMethod method = TrainingMethod::Qcbm;
    QcbmConfig qcbm;
    QganConfig qgan;
    std::string params_file;
    KlColumn kl_report = KlColumn::Exact;

    std::optional<SweepSpec> sweep;
    /// Set on configs produced by materialize_sweep.
    std::optional<std::pair<std::string, double>> applied_sweep;

    void validate() const;

    /// Resolved `key = value` pairs in emission order (stable; used for
    /// the record echo and the hash).
    std::vector<std::pair<std::string, std::string>> canonical_items() const;

    /// FNV-1a over the sorted canonical items; master_seed is excluded so
    /// equal-hash runs with equal seeds reproduce each other. Stable
    /// under key reordering in the source text.
    std::uint64_t hash() const;
    std::string hash_hex() const;

    /// Builds the training target for this config (deterministic).
    TargetDistribution build_target() const;

    /// Expands the sweep section into concrete configs (or returns just
    /// this config when no sweep is present).
    std::vector<BenchmarkConfig> materialize_sweep() const;
};

/// Parses and validates; unknown or duplicate keys are rejected.
/// Relative profile paths are resolved against base_dir.
BenchmarkConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

BenchmarkConfig load_config_file(const std::filesystem::path& path);

}  // namespace qgb
