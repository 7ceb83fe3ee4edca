#include "qgb/record.hpp"

#include <sstream>

#include "qgb/errors.hpp"
#include "qgb/version.hpp"
#include "util.hpp"

namespace qgb {

namespace {
constexpr const char* kCsvHeader = "epoch,cumulative_executions,kl_exact,kl_estimated,wall_ms";
}

std::filesystem::path write_record_file(const std::filesystem::path& dir, const RunRecord& record) {
    std::ostringstream out;
    out << "# qgb_record_version = 1\n";
    out << "# software_version = " << kVersion << '\n';
    out << "# run_id = " << record.run_id << '\n';
    out << "# config_hash = " << record.config_hash << '\n';
    out << "# repetition = " << record.repetition << '\n';
    out << "# seed = " << record.seed << '\n';
    out << "# random_baseline = " << util::format_double(record.random_baseline) << '\n';
    if (record.sweep) {
        out << "# sweep_parameter = " << record.sweep->first << '\n';
        out << "# sweep_value = " << util::format_double(record.sweep->second) << '\n';
    }
    if (record.fit) {
        out << "# fit_alpha = " << util::format_double(record.fit->alpha) << '\n';
        out << "# fit_beta = " << util::format_double(record.fit->beta) << '\n';
        out << "# fit_gamma = " << util::format_double(record.fit->gamma) << '\n';
        out << "# fit_c_conv = " << util::format_double(record.fit->c_conv) << '\n';
        out << "# fit_residual_rms = " << util::format_double(record.fit->residual_rms) << '\n';
    }
    out << "# started_at = " << record.started_at << '\n';
    out << "# finished_at = " << record.finished_at << '\n';
    for (const auto& [key, value] : record.meta) out << "# " << key << " = " << value << '\n';
    out << kCsvHeader << '\n';
    for (const TraceRow& row : record.trace.rows) {
        out << row.epoch << ',' << row.cumulative_executions << ',' << util::format_double(row.kl_exact) << ','
            << util::format_double(row.kl_estimated) << ',' << row.wall_ms << '\n';
    }
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / (record.run_id + ".record");
    util::write_text_file_atomic(path.string(), out.str());
    return path;
}

RunRecord read_record_file(const std::filesystem::path& path) {
    const std::string text = util::read_text_file(path.string());
    RunRecord record;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    std::optional<FitResult> fit;
    bool has_fit = false;
    std::optional<std::string> sweep_param;
    std::optional<double> sweep_value;
    while (std::getline(in, line)) {
        const std::string_view trimmed = util::trim(line);
        if (trimmed.empty()) continue;
        if (!header_done) {
            if (trimmed.starts_with("#")) {
                const std::string_view body = util::trim(trimmed.substr(1));
                const auto eq = body.find('=');
                if (eq == std::string_view::npos) continue;
                const std::string key{util::trim(body.substr(0, eq))};
                const std::string value{util::trim(body.substr(eq + 1))};
                if (key == "run_id") {
                    record.run_id = value;
                } else if (key == "config_hash") {
                    record.config_hash = value;
                } else if (key == "repetition") {
                    record.repetition = static_cast<int>(util::parse_int(value, "record.repetition"));
                } else if (key == "seed") {
                    record.seed = util::parse_uint64(value, "record.seed");
                } else if (key == "random_baseline") {
                    record.random_baseline = util::parse_double(value, "record.random_baseline");
                } else if (key == "sweep_parameter") {
                    sweep_param = value;
                } else if (key == "sweep_value") {
                    sweep_value = util::parse_double(value, "record.sweep_value");
                } else if (key == "fit_alpha") {
                    if (!fit) fit.emplace();
                    fit->alpha = util::parse_double(value, "record.fit_alpha");
                    has_fit = true;
                } else if (key == "fit_beta") {
                    if (!fit) fit.emplace();
                    fit->beta = util::parse_double(value, "record.fit_beta");
                } else if (key == "fit_gamma") {
                    if (!fit) fit.emplace();
                    fit->gamma = util::parse_double(value, "record.fit_gamma");
                } else if (key == "fit_c_conv") {
                    if (!fit) fit.emplace();
                    fit->c_conv = util::parse_double(value, "record.fit_c_conv");
                } else if (key == "fit_residual_rms") {
                    if (!fit) fit.emplace();
                    fit->residual_rms = util::parse_double(value, "record.fit_residual_rms");
                } else if (key == "started_at") {
                    record.started_at = value;
                } else if (key == "finished_at") {
                    record.finished_at = value;
                } else {
                    record.meta[key] = value;
                }
                continue;
            }
            if (trimmed == kCsvHeader) {
                header_done = true;
                continue;
            }
            throw validation_error("record '" + path.string() + "': malformed header line '" + line + "'");
        }
        const auto fields = util::split(trimmed, ',');
        if (fields.size() != 5)
            throw validation_error("record '" + path.string() + "': bad row '" + line + "'");
        TraceRow row;
        row.epoch = util::parse_int(fields[0], "record.epoch");
        row.cumulative_executions = util::parse_uint64(fields[1], "record.cumulative_executions");
        row.kl_exact = util::parse_double(fields[2], "record.kl_exact");
        row.kl_estimated = util::parse_double(fields[3], "record.kl_estimated");
        row.wall_ms = util::parse_int(fields[4], "record.wall_ms");
        record.trace.rows.push_back(row);
    }
    if (!header_done) throw validation_error("record '" + path.string() + "': missing CSV header");
    if (has_fit) record.fit = fit;
    if (sweep_param && sweep_value) record.sweep = {{*sweep_param, *sweep_value}};
    return record;
}

}  // namespace qgb
