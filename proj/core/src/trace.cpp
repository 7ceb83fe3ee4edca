#include "qgb/trace.hpp"

#include "qgb/errors.hpp"

namespace qgb {

void TrainingTrace::validate() const {
    std::uint64_t prev = 0;
    bool first = true;
    for (const TraceRow& row : rows) {
        if (!first && row.cumulative_executions <= prev)
            throw validation_error("trace: cumulative_executions not strictly increasing");
        if (!(row.kl_exact >= 0.0) || !(row.kl_estimated >= 0.0))
            throw validation_error("trace: negative or non-finite KL value");
        prev = row.cumulative_executions;
        first = false;
    }
}

}  // namespace qgb
