#pragma once

#include <filesystem>
#include <string_view>

namespace qgb {

enum class FigureKind { Convergence, NoiseSweep };

FigureKind figure_from_name(std::string_view name);

/// Builds the figure table from the record files in records_dir and
/// writes it next to them; returns the written path.
///
/// convergence: one block per run group, columns
///   method,cumulative_executions,mean_kl,stderr.
/// noise_sweep: one row per (n_qubits, error rate), columns
///   n_qubits,error_rate,mean_c_conv,stderr_c_conv,random_baseline,n_reps.
std::filesystem::path export_figure_data(const std::filesystem::path& records_dir, FigureKind figure);

}  // namespace qgb
