#include "qgb/aggregate.hpp"

#include <cmath>
#include <string>

#include "qgb/errors.hpp"

namespace qgb {

const char* kl_column_name(KlColumn column) { return column == KlColumn::Exact ? "kl_exact" : "kl_estimated"; }

KlColumn kl_column_from_name(std::string_view name) {
    if (name == "kl_exact" || name == "exact") return KlColumn::Exact;
    if (name == "kl_estimated" || name == "estimated") return KlColumn::Estimated;
    throw validation_error("unknown KL column '" + std::string(name) + "'");
}

AggregateCurve aggregate(std::span<const TrainingTrace> traces, KlColumn column) {
    if (traces.empty()) throw validation_error("aggregate: no traces");
    const std::size_t rows = traces[0].rows.size();
    for (const TrainingTrace& t : traces) {
        if (t.rows.size() != rows) throw validation_error("aggregate: traces have different lengths");
        for (std::size_t i = 0; i < rows; ++i) {
            if (t.rows[i].cumulative_executions != traces[0].rows[i].cumulative_executions)
                throw validation_error("aggregate: execution grids are misaligned");
        }
    }
    const auto reps = static_cast<double>(traces.size());
    AggregateCurve curve;
    curve.n_reps = static_cast<int>(traces.size());
    curve.x.resize(rows);
    curve.mean.resize(rows);
    curve.stderr_of_mean.assign(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        curve.x[i] = static_cast<double>(traces[0].rows[i].cumulative_executions);
        double sum = 0.0;
        for (const TrainingTrace& t : traces)
            sum += column == KlColumn::Exact ? t.rows[i].kl_exact : t.rows[i].kl_estimated;
        const double mean = sum / reps;
        curve.mean[i] = mean;
        if (traces.size() > 1) {
            double sq = 0.0;
            for (const TrainingTrace& t : traces) {
                const double v = column == KlColumn::Exact ? t.rows[i].kl_exact : t.rows[i].kl_estimated;
                sq += (v - mean) * (v - mean);
            }
            curve.stderr_of_mean[i] = std::sqrt(sq / (reps - 1.0)) / std::sqrt(reps);
        }
    }
    return curve;
}

}  // namespace qgb
