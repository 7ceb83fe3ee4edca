#include "qgb/export.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qgb/errors.hpp"
#include "qgb/runner.hpp"
#include "util.hpp"

namespace qgb {

FigureKind figure_from_name(std::string_view name) {
    if (name == "convergence") return FigureKind::Convergence;
    if (name == "noise_sweep") return FigureKind::NoiseSweep;
    throw validation_error("unknown figure '" + std::string(name) + "'");
}

namespace {

std::string meta_or(const RunRecord& r, const std::string& key, const std::string& fallback) {
    const auto it = r.meta.find(key);
    return it == r.meta.end() ? fallback : it->second;
}

std::string curve_label(const RunRecord& r) {
    const std::string method = meta_or(r, "config.training.method", "unknown");
    if (method == "qcbm") return method + "_shots" + meta_or(r, "config.backend.n_shots", "0");
    return method;
}

std::filesystem::path export_convergence(const std::filesystem::path& dir, const std::vector<RunRecord>& records) {
    std::vector<std::string> hashes;
    for (const RunRecord& r : records) {
        if (r.trace.rows.empty()) continue;
        if (std::find(hashes.begin(), hashes.end(), r.config_hash) == hashes.end()) hashes.push_back(r.config_hash);
    }
    if (hashes.empty()) throw validation_error("export: no records with trace rows in " + dir.string());

    struct Block {
        std::string label;
        std::string hash;
        AggregateCurve curve;
    };
    std::vector<Block> blocks;
    for (const std::string& hash : hashes) {
        std::vector<TrainingTrace> traces;
        const RunRecord* head = nullptr;
        for (const RunRecord& r : records) {
            if (r.config_hash != hash) continue;
            if (!head) head = &r;
            traces.push_back(r.trace);
        }
        const KlColumn column = kl_column_from_name(meta_or(*head, "config.training.kl_report", "kl_exact"));
        blocks.push_back({curve_label(*head), hash, aggregate(traces, column)});
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return a.label != b.label ? a.label < b.label : a.hash < b.hash;
    });

    std::ostringstream out;
    out << "method,cumulative_executions,mean_kl,stderr\n";
    for (const Block& block : blocks) {
        for (std::size_t i = 0; i < block.curve.x.size(); ++i) {
            out << block.label << ',' << static_cast<std::uint64_t>(block.curve.x[i]) << ','
                << util::format_double(block.curve.mean[i]) << ','
                << util::format_double(block.curve.stderr_of_mean[i]) << '\n';
        }
    }
    const std::filesystem::path path = dir / "figure_convergence.csv";
    util::write_text_file_atomic(path.string(), out.str());
    return path;
}

std::filesystem::path export_noise_sweep(const std::filesystem::path& dir, const std::vector<RunRecord>& records) {
    struct Key {
        int n_qubits;
        double error_rate;
        bool operator<(const Key& other) const {
            return n_qubits != other.n_qubits ? n_qubits < other.n_qubits : error_rate < other.error_rate;
        }
    };
    std::map<Key, std::vector<const RunRecord*>> groups;
    std::string sweep_parameter;
    for (const RunRecord& r : records) {
        if (!r.sweep) throw validation_error("export noise_sweep: record " + r.run_id + " has no sweep value");
        if (!r.fit) throw validation_error("export noise_sweep: record " + r.run_id + " has no fit");
        if (sweep_parameter.empty()) {
            sweep_parameter = r.sweep->first;
        } else if (sweep_parameter != r.sweep->first) {
            throw validation_error("export noise_sweep: mixed sweep parameters in " + dir.string());
        }
        const int n = static_cast<int>(util::parse_int(meta_or(r, "config.application.n_qubits", "0"), "export"));
        groups[{n, r.sweep->second}].push_back(&r);
    }
    if (groups.empty()) throw validation_error("export: no sweep records in " + dir.string());

    std::ostringstream out;
    out << "# sweep_parameter = " << sweep_parameter << '\n';
    out << "n_qubits,error_rate,mean_c_conv,stderr_c_conv,random_baseline,n_reps\n";
    for (const auto& [key, group] : groups) {
        double mean = 0.0;
        for (const RunRecord* r : group) mean += r->fit->c_conv;
        mean /= static_cast<double>(group.size());
        double stderr_c = 0.0;
        if (group.size() > 1) {
            double sq = 0.0;
            for (const RunRecord* r : group) sq += (r->fit->c_conv - mean) * (r->fit->c_conv - mean);
            stderr_c = std::sqrt(sq / (static_cast<double>(group.size()) - 1.0)) /
                       std::sqrt(static_cast<double>(group.size()));
        }
        out << key.n_qubits << ',' << util::format_double(key.error_rate) << ',' << util::format_double(mean) << ','
            << util::format_double(stderr_c) << ',' << util::format_double(group.front()->random_baseline) << ','
            << group.size() << '\n';
    }
    const std::filesystem::path path = dir / "figure_noise_sweep.csv";
    util::write_text_file_atomic(path.string(), out.str());
    return path;
}

}  // namespace

std::filesystem::path export_figure_data(const std::filesystem::path& records_dir, FigureKind figure) {
    const std::vector<RunRecord> records = read_records_dir(records_dir);
    if (records.empty()) throw validation_error("export: no record files in " + records_dir.string());
    return figure == FigureKind::Convergence ? export_convergence(records_dir, records)
                                             : export_noise_sweep(records_dir, records);
}

}  // namespace qgb
