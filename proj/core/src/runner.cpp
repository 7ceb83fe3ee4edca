#include "qgb/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qgb/copula.hpp"
#include "qgb/divergence.hpp"
#include "qgb/errors.hpp"
#include "qgb/inference.hpp"
#include "util.hpp"

namespace qgb {

namespace {

std::string make_run_id(const std::string& hash, int repetition) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "_rep%03d", repetition);
    return hash + buf;
}

struct PointContext {
    BenchmarkConfig cfg;
    std::string hash;
    TargetDistribution target;
    Circuit circuit;
    double baseline = 0.0;
};

RunRecord run_one(const PointContext& point, int repetition, const std::filesystem::path& out_dir,
                  std::mutex& io_mutex) {
    const BenchmarkConfig& cfg = point.cfg;
    RunRecord record;
    record.run_id = make_run_id(point.hash, repetition);
    record.config_hash = point.hash;
    record.repetition = repetition;
    record.seed = cfg.master_seed + static_cast<std::uint64_t>(repetition);
    record.random_baseline = point.baseline;
    record.sweep = cfg.applied_sweep;
    record.started_at = util::iso8601_utc_now();
    for (const auto& [key, value] : cfg.canonical_items()) record.meta["config." + key] = value;
    record.meta["kl_floor"] = util::format_double(kKlFloor);
    if (cfg.profile_path) record.meta["backend_profile"] = *cfg.profile_path;
    if (cfg.method == TrainingMethod::Qgan) record.meta["generator_loss"] = "non_saturating";

    RandomStream rng(record.seed);
    const BackendSpec backend{cfg.backend_mode, cfg.noise};

    TrainResult trained;
    if (cfg.method == TrainingMethod::Qcbm) {
        trained = train_qcbm(point.circuit, point.target, cfg.qcbm, backend, rng);
    } else if (cfg.method == TrainingMethod::Qgan) {
        trained = train_qgan(point.circuit, point.target, cfg.qgan, rng);
    } else {
        const std::vector<double> params = load_params_file(cfg.params_file);
        const ShotHistogram hist = run_inference(point.circuit, params, cfg.n_shots, backend, rng);
        std::ostringstream csv;
        csv << "index,count\n";
        for (std::size_t i = 0; i < hist.counts.size(); ++i) csv << i << ',' << hist.counts[i] << '\n';
        record.finished_at = util::iso8601_utc_now();
        const std::scoped_lock lock(io_mutex);
        util::write_text_file_atomic((out_dir / (record.run_id + "_histogram.csv")).string(), csv.str());
        write_record_file(out_dir, record);
        return record;
    }

    trained.trace.validate();
    record.trace = std::move(trained.trace);
    if (record.trace.rows.size() >= 8) {
        std::vector<double> x, y;
        x.reserve(record.trace.rows.size());
        y.reserve(record.trace.rows.size());
        for (const TraceRow& row : record.trace.rows) {
            x.push_back(static_cast<double>(row.cumulative_executions));
            y.push_back(cfg.kl_report == KlColumn::Exact ? row.kl_exact : row.kl_estimated);
        }
        record.fit = fit_stretched_exponential(x, y);
    }
    record.finished_at = util::iso8601_utc_now();

    const std::scoped_lock lock(io_mutex);
    save_params_file(out_dir / (record.run_id + ".params"), trained.final_params);
    write_record_file(out_dir, record);
    return record;
}

}  // namespace

std::vector<RunRecord> run_benchmark(const BenchmarkConfig& base_cfg, const RunOptions& opts) {
    BenchmarkConfig cfg = base_cfg;
    if (opts.seed_override) cfg.master_seed = *opts.seed_override;
    cfg.validate();
    std::filesystem::create_directories(opts.out_dir);

    std::vector<PointContext> points;
    const TargetDistribution target = cfg.build_target();  // sweeps never touch the dataset
    for (BenchmarkConfig& point_cfg : cfg.materialize_sweep()) {
        PointContext point;
        point.hash = point_cfg.hash_hex();
        point.cfg = std::move(point_cfg);
        point.target = target;
        point.circuit = build_copula({point.cfg.n_qubits, point.cfg.circuit_depth});
        point.baseline = random_baseline(target.pmf);
        points.push_back(std::move(point));
    }
    write_pmf_csv(opts.out_dir / (points.front().hash + "_target.csv"), target.pmf);

    struct Task {
        std::size_t point_index;
        int repetition;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (int rep = 0; rep < cfg.repetitions; ++rep) tasks.push_back({p, rep});
    }

    std::vector<RunRecord> records(tasks.size());
    std::mutex io_mutex;
    std::atomic<std::size_t> next_task{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                records[t] = run_one(points[tasks[t].point_index], tasks[t].repetition, opts.out_dir, io_mutex);
            } catch (...) {
                const std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const int n_workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(tasks.size())));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(records.begin(), records.end(),
              [](const RunRecord& a, const RunRecord& b) { return a.run_id < b.run_id; });
    write_aggregates(opts.out_dir, records);
    return records;
}

std::vector<RunRecord> read_records_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> paths;
    if (!std::filesystem::is_directory(dir)) throw validation_error("not a directory: " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".record") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    std::vector<RunRecord> records;
    records.reserve(paths.size());
    for (const auto& path : paths) records.push_back(read_record_file(path));
    std::sort(records.begin(), records.end(),
              [](const RunRecord& a, const RunRecord& b) { return a.run_id < b.run_id; });
    return records;
}

std::vector<std::filesystem::path> write_aggregates(const std::filesystem::path& dir,
                                                    std::span<const RunRecord> records) {
    std::vector<std::string> hashes;
    for (const RunRecord& r : records) {
        if (std::find(hashes.begin(), hashes.end(), r.config_hash) == hashes.end())
            hashes.push_back(r.config_hash);
    }
    std::sort(hashes.begin(), hashes.end());

    std::vector<std::filesystem::path> written;
    for (const std::string& hash : hashes) {
        std::vector<const RunRecord*> group;
        for (const RunRecord& r : records) {
            if (r.config_hash == hash) group.push_back(&r);
        }
        if (group.front()->trace.rows.empty()) continue;

        std::vector<TrainingTrace> traces;
        traces.reserve(group.size());
        for (const RunRecord* r : group) traces.push_back(r->trace);
        KlColumn column = KlColumn::Exact;
        if (const auto it = group.front()->meta.find("config.training.kl_report"); it != group.front()->meta.end())
            column = kl_column_from_name(it->second);
        const AggregateCurve curve = aggregate(traces, column);

        std::ostringstream out;
        out << "# qgb_aggregate_version = 1\n";
        out << "# config_hash = " << hash << '\n';
        out << "# n_reps = " << curve.n_reps << '\n';
        out << "# kl_column = " << kl_column_name(column) << '\n';
        out << "# random_baseline = " << util::format_double(group.front()->random_baseline) << '\n';
        if (group.front()->sweep) {
            out << "# sweep_parameter = " << group.front()->sweep->first << '\n';
            out << "# sweep_value = " << util::format_double(group.front()->sweep->second) << '\n';
        }
        const bool all_fit = std::all_of(group.begin(), group.end(), [](const RunRecord* r) { return r->fit.has_value(); });
        if (all_fit) {
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
            out << "# mean_c_conv = " << util::format_double(mean) << '\n';
            out << "# stderr_c_conv = " << util::format_double(stderr_c) << '\n';
        }
        out << "cumulative_executions,mean_kl,stderr\n";
        for (std::size_t i = 0; i < curve.x.size(); ++i) {
            out << static_cast<std::uint64_t>(curve.x[i]) << ',' << util::format_double(curve.mean[i]) << ','
                << util::format_double(curve.stderr_of_mean[i]) << '\n';
        }
        const std::filesystem::path path = dir / (hash + "_aggregate.csv");
        util::write_text_file_atomic(path.string(), out.str());
        written.push_back(path);
    }
    return written;
}

}  // namespace qgb
