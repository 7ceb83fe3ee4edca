// qgb command-line front end: benchmark runs, gate-count reports,
// aggregation, curve fitting, figure-table export and inference.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgb/config.hpp"
#include "qgb/copula.hpp"
#include "qgb/divergence.hpp"
#include "qgb/errors.hpp"
#include "qgb/export.hpp"
#include "qgb/inference.hpp"
#include "qgb/record.hpp"
#include "qgb/runner.hpp"
#include "qgb/stretched_fit.hpp"
#include "qgb/version.hpp"

namespace {

std::filesystem::path default_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("QGB_OUT_DIR"); env != nullptr && *env != '\0') return env;
    return "runs";
}

void cmd_run(const std::string& config_path, const std::string& out, int workers,
             std::optional<std::uint64_t> seed) {
    const qgb::BenchmarkConfig cfg = qgb::load_config_file(config_path);
    std::cout << "# resolved config (hash " << cfg.hash_hex() << ")\n";
    for (const auto& [key, value] : cfg.canonical_items()) std::cout << key << " = " << value << '\n';

    qgb::RunOptions opts;
    opts.out_dir = default_out_dir(out);
    opts.workers = workers;
    opts.seed_override = seed;
    const std::vector<qgb::RunRecord> records = qgb::run_benchmark(cfg, opts);

    std::cout << "# wrote " << records.size() << " record(s) to " << opts.out_dir.string() << '\n';
    for (const qgb::RunRecord& record : records) {
        std::cout << record.run_id;
        if (record.sweep) std::cout << "  " << record.sweep->first << " = " << record.sweep->second;
        if (!record.trace.rows.empty()) std::cout << "  final_kl_exact = " << record.trace.rows.back().kl_exact;
        if (record.fit) std::cout << "  c_conv = " << record.fit->c_conv;
        std::cout << '\n';
    }
}

void cmd_gatecount(const std::string& n_list, int depth) {
    std::cout << "n,depth,one_qubit,two_qubit\n";
    std::size_t start = 0;
    const std::string list = n_list + ",";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] != ',') continue;
        const std::string token = list.substr(start, i - start);
        start = i + 1;
        if (token.empty()) continue;
        char* end = nullptr;
        const long n_long = std::strtol(token.c_str(), &end, 10);
        if (end != token.c_str() + token.size())
            throw qgb::validation_error("gatecount: bad qubit count '" + token + "'");
        const int n = static_cast<int>(n_long);
        const qgb::GateCount count = qgb::count_gates(qgb::build_copula({n, depth}));
        std::cout << n << ',' << depth << ',' << count.one_qubit << ',' << count.two_qubit << '\n';
    }
}

void cmd_aggregate(const std::string& dir) {
    const auto records = qgb::read_records_dir(dir);
    if (records.empty()) throw qgb::validation_error("no record files in " + dir);
    for (const auto& path : qgb::write_aggregates(dir, records)) std::cout << path.string() << '\n';
}

void cmd_fit(const std::string& record_path, const std::string& column_name) {
    const qgb::RunRecord record = qgb::read_record_file(record_path);
    if (record.trace.rows.size() < 8) throw qgb::validation_error("record has fewer than 8 epochs; nothing to fit");
    qgb::KlColumn column = qgb::KlColumn::Exact;
    if (!column_name.empty()) {
        column = qgb::kl_column_from_name(column_name);
    } else if (const auto it = record.meta.find("config.training.kl_report"); it != record.meta.end()) {
        column = qgb::kl_column_from_name(it->second);
    }
    std::vector<double> x, y;
    for (const qgb::TraceRow& row : record.trace.rows) {
        x.push_back(static_cast<double>(row.cumulative_executions));
        y.push_back(column == qgb::KlColumn::Exact ? row.kl_exact : row.kl_estimated);
    }
    const qgb::FitResult fit = qgb::fit_stretched_exponential(x, y);
    std::cout << "alpha,beta,gamma,c_conv,residual_rms\n";
    std::cout << fit.alpha << ',' << fit.beta << ',' << fit.gamma << ',' << fit.c_conv << ',' << fit.residual_rms
              << '\n';
}

void cmd_export(const std::string& figure, const std::string& dir) {
    std::cout << qgb::export_figure_data(dir, qgb::figure_from_name(figure)).string() << '\n';
}

void cmd_infer(const std::string& params_path, const std::string& config_path, std::uint64_t shots,
               const std::string& out_file, std::optional<std::uint64_t> seed) {
    const qgb::BenchmarkConfig cfg = qgb::load_config_file(config_path);
    const qgb::Circuit circuit = qgb::build_copula({cfg.n_qubits, cfg.circuit_depth});
    const std::vector<double> params = qgb::load_params_file(params_path);
    qgb::RandomStream rng(seed.value_or(cfg.master_seed));
    const qgb::ShotHistogram hist =
        qgb::run_inference(circuit, params, shots, {cfg.backend_mode, cfg.noise}, rng);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_file.empty()) {
        file.open(out_file);
        if (!file) throw std::runtime_error("cannot open " + out_file + " for writing");
        out = &file;
    }
    *out << "index,count\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i) *out << i << ',' << hist.counts[i] << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgb: quantum generative-model benchmarks"};
    app.set_version_flag("--version", qgb::kVersion);
    app.require_subcommand(1);

    std::string config_path, out_dir, n_list = "6,8,10,12", dir, record_path, column, figure, params_path, out_file;
    int workers = 1, depth = 1;
    std::uint64_t shots = 10'000;
    std::optional<std::uint64_t> seed;

    CLI::App* run = app.add_subcommand("run", "run a benchmark config");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--out", out_dir, "output directory (default: $QGB_OUT_DIR or ./runs)");
    run->add_option("--workers", workers, "parallel repetition workers")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "override application.master_seed");
    run->callback([&] { cmd_run(config_path, out_dir, workers, seed); });

    CLI::App* gatecount = app.add_subcommand("gatecount", "copula gate-class totals");
    gatecount->add_option("--n", n_list, "qubit count(s), comma-separated");
    gatecount->add_option("--depth", depth, "circuit depth")->check(CLI::PositiveNumber);
    gatecount->callback([&] { cmd_gatecount(n_list, depth); });

    CLI::App* aggregate = app.add_subcommand("aggregate", "rebuild aggregate files from records");
    aggregate->add_option("dir", dir, "directory of .record files")->required();
    aggregate->callback([&] { cmd_aggregate(dir); });

    CLI::App* fit = app.add_subcommand("fit", "stretched-exponential fit of one record");
    fit->add_option("record", record_path, "record file")->required();
    fit->add_option("--column", column, "kl_exact or kl_estimated (default: the record's reporting mode)");
    fit->callback([&] { cmd_fit(record_path, column); });

    CLI::App* exp = app.add_subcommand("export", "write figure tables from records");
    exp->add_option("--figure", figure, "convergence or noise_sweep")->required();
    exp->add_option("dir", dir, "directory of .record files")->required();
    exp->callback([&] { cmd_export(figure, dir); });

    CLI::App* infer = app.add_subcommand("infer", "sample a trained model");
    infer->add_option("--params", params_path, "trained parameter file")->required();
    infer->add_option("--config", config_path, "config file (circuit and backend)")->required();
    infer->add_option("--shots", shots, "number of shots")->check(CLI::PositiveNumber);
    infer->add_option("--out", out_file, "histogram CSV path (default: stdout)");
    infer->add_option("--seed", seed, "sampling seed (default: master_seed)");
    infer->callback([&] { cmd_infer(params_path, config_path, shots, out_file, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const qgb::validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
