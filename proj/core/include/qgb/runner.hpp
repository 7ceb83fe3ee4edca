#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "qgb/config.hpp"
#include "qgb/record.hpp"

namespace qgb {

struct RunOptions {
    std::filesystem::path out_dir = "runs";
    int workers = 1;
    std::optional<std::uint64_t> seed_override;
};

/// Executes every (sweep point, repetition) task of the config.
/// Repetition k runs with seed master_seed + k; the target distribution
/// is built once and shared read-only. Tasks may run on a worker pool;
/// each task owns its random stream, so results are identical for any
/// worker count. Per-repetition record and parameter files plus one
/// aggregate file per sweep point are persisted (write-then-rename).
/// Returns the records sorted by run_id.
std::vector<RunRecord> run_benchmark(const BenchmarkConfig& cfg, const RunOptions& opts);

/// Reads every *.record file in the directory, sorted by run_id.
std::vector<RunRecord> read_records_dir(const std::filesystem::path& dir);

/// Groups records by config hash and rewrites one aggregate CSV per
/// group (regenerable from the per-repetition files alone). Groups whose
/// traces are empty are skipped. Returns the written paths.
std::vector<std::filesystem::path> write_aggregates(const std::filesystem::path& dir,
                                                    std::span<const RunRecord> records);

}  // namespace qgb
