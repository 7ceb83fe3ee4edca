#pragma once

#include <cstdint>
#include <vector>

namespace qgb {

/// One row per training epoch. kl_exact is the divergence against the
/// backend's exact observable PMF (noise included where the backend can
/// express it exactly); kl_estimated is the shot-based value the trainer
/// actually saw. Reporting costs no circuit executions.
struct TraceRow {
    std::int64_t epoch = 0;
    std::uint64_t cumulative_executions = 0;
    double kl_exact = 0.0;
    double kl_estimated = 0.0;
    std::int64_t wall_ms = 0;
};

struct TrainingTrace {
    std::vector<TraceRow> rows;

    /// cumulative_executions strictly increasing, KL values >= 0.
    void validate() const;
};

struct TrainResult {
    TrainingTrace trace;
    std::vector<double> final_params;  // QCBM: best candidate ever; QGAN: parameters after the last epoch
};

}  // namespace qgb
