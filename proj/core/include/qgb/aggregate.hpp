#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qgb/trace.hpp"

namespace qgb {

enum class KlColumn { Exact, Estimated };

const char* kl_column_name(KlColumn column);
KlColumn kl_column_from_name(std::string_view name);

/// Pointwise mean and standard error of the mean (sample std / sqrt(R))
/// across repetitions; a single trace reports stderr 0 by convention.
struct AggregateCurve {
    std::vector<double> x;  // cumulative executions grid
    std::vector<double> mean;
    std::vector<double> stderr_of_mean;
    int n_reps = 0;
};

/// Traces must share the exact execution grid (guaranteed by the
/// deterministic accounting of both trainers).
AggregateCurve aggregate(std::span<const TrainingTrace> traces, KlColumn column);

}  // namespace qgb
