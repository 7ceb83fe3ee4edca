#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "qgb/stretched_fit.hpp"
#include "qgb/trace.hpp"

namespace qgb {

/// One repetition's persisted result. Serialized as a '#'-prefixed
/// header block (key = value) followed by one CSV row per epoch:
/// epoch,cumulative_executions,kl_exact,kl_estimated,wall_ms.
/// KL values round-trip exactly (17 significant digits).
struct RunRecord {
    std::string run_id;
    std::string config_hash;  // 16 hex digits
    int repetition = 0;
    std::uint64_t seed = 0;
    double random_baseline = 0.0;
    std::optional<FitResult> fit;  // present when the trace has >= 8 rows
    std::optional<std::pair<std::string, double>> sweep;  // parameter, value
    std::string started_at;
    std::string finished_at;
    std::map<std::string, std::string> meta;  // resolved config echo and extras
    TrainingTrace trace;
};

/// File name is `<run_id>.record`; the write goes through a temp file and
/// rename, so a record is either absent or complete.
std::filesystem::path write_record_file(const std::filesystem::path& dir, const RunRecord& record);

RunRecord read_record_file(const std::filesystem::path& path);

}  // namespace qgb
