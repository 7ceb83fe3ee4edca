#include "qgb/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qgb/errors.hpp"
#include "qgb/profile.hpp"
#include "util.hpp"

namespace qgb {

const char* dataset_kind_name(DatasetKind kind) { return kind == DatasetKind::XShape ? "x_shape" : "parity"; }

const char* training_method_name(TrainingMethod method) {
    switch (method) {
        case TrainingMethod::Qcbm: return "qcbm";
        case TrainingMethod::Qgan: return "qgan";
        case TrainingMethod::Inference: return "inference";
    }
    return "?";
}

namespace {

DatasetKind dataset_kind_from_name(std::string_view name) {
    if (name == "x_shape") return DatasetKind::XShape;
    if (name == "parity") return DatasetKind::Parity;
    throw validation_error("unknown dataset kind '" + std::string(name) + "'");
}

TrainingMethod training_method_from_name(std::string_view name) {
    if (name == "qcbm") return TrainingMethod::Qcbm;
    if (name == "qgan") return TrainingMethod::Qgan;
    if (name == "inference") return TrainingMethod::Inference;
    throw validation_error("unknown training method '" + std::string(name) + "'");
}

const std::set<std::string> kSweepParameters = {"backend.readout",     "backend.p_depol_2q",
                                                "backend.p_depol_1q",  "backend.amp_damping",
                                                "backend.phase_damping", "backend.n_shots"};

std::vector<int> parse_int_list(std::string_view value, const std::string& context) {
    std::vector<int> out;
    for (const std::string& part : util::split(value, ',')) {
        if (part.empty()) continue;
        out.push_back(static_cast<int>(util::parse_int(part, context)));
    }
    if (out.empty()) throw validation_error(context + ": empty list");
    return out;
}

std::string format_int_list(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    return out.str();
}

}  // namespace

void BenchmarkConfig::validate() const {
    if (n_qubits < 2 || n_qubits % 2 != 0)
        throw validation_error("application.n_qubits must be even and >= 2 for the copula circuit");
    if (repetitions < 1) throw validation_error("application.repetitions must be >= 1");
    if (circuit_depth < 1) throw validation_error("circuit.depth must be >= 1");
    if (dataset.kind == DatasetKind::Parity && dataset.parity != 0 && dataset.parity != 1)
        throw validation_error("dataset.parity must be 0 or 1");
    if (dataset.kind == DatasetKind::XShape) {
        if (dataset.n_points < 1) throw validation_error("dataset.n_points must be >= 1");
        if (!(dataset.jitter_std >= 0.0)) throw validation_error("dataset.jitter_std must be >= 0");
    }
    if (n_shots < 1) throw validation_error("backend.n_shots must be >= 1");
    validate_backend({backend_mode, noise}, n_qubits);
    switch (method) {
        case TrainingMethod::Qcbm:
            qcbm.validate();
            break;
        case TrainingMethod::Qgan:
            qgan.validate();
            if (backend_mode != BackendMode::Statevector || !noise.is_noise_free())
                throw validation_error("qgan training requires the noise-free statevector backend");
            break;
        case TrainingMethod::Inference:
            if (params_file.empty()) throw validation_error("training.params_file is required for inference");
            break;
    }
    if (sweep) {
        if (!kSweepParameters.contains(sweep->parameter))
            throw validation_error("sweep.parameter '" + sweep->parameter + "' is not sweepable");
        if (sweep->values.empty()) throw validation_error("sweep.values must be non-empty");
        for (const BenchmarkConfig& point : materialize_sweep()) point.validate();
    }
}

std::vector<std::pair<std::string, std::string>> BenchmarkConfig::canonical_items() const {
    using util::format_double;
    std::vector<std::pair<std::string, std::string>> items;
    items.emplace_back("application.n_qubits", std::to_string(n_qubits));
    items.emplace_back("application.repetitions", std::to_string(repetitions));
    items.emplace_back("application.master_seed", std::to_string(master_seed));
    items.emplace_back("dataset.kind", dataset_kind_name(dataset.kind));
    if (dataset.kind == DatasetKind::XShape) {
        items.emplace_back("dataset.n_points", std::to_string(dataset.n_points));
        items.emplace_back("dataset.jitter_std", format_double(dataset.jitter_std));
        items.emplace_back("dataset.seed", std::to_string(dataset.seed));
        items.emplace_back("transform.kind", transform_name(transform));
    } else {
        items.emplace_back("dataset.parity", std::to_string(dataset.parity));
    }
    items.emplace_back("circuit.kind", "copula");
    items.emplace_back("circuit.depth", std::to_string(circuit_depth));
    items.emplace_back("backend.mode", backend_name(backend_mode));
    items.emplace_back("backend.n_shots", std::to_string(n_shots));
    items.emplace_back("backend.p01", format_double(noise.p01));
    items.emplace_back("backend.p10", format_double(noise.p10));
    items.emplace_back("backend.p_depol_2q", format_double(noise.p_depol_2q));
    items.emplace_back("backend.p_depol_1q", format_double(noise.p_depol_1q));
    items.emplace_back("backend.amp_damping", format_double(noise.amp_damping));
    items.emplace_back("backend.phase_damping", format_double(noise.phase_damping));
    items.emplace_back("training.method", training_method_name(method));
    switch (method) {
        case TrainingMethod::Qcbm:
            items.emplace_back("training.population", std::to_string(qcbm.population));
            items.emplace_back("training.sigma0", format_double(qcbm.sigma0));
            items.emplace_back("training.max_generations", std::to_string(qcbm.max_generations));
            break;
        case TrainingMethod::Qgan:
            items.emplace_back("training.batch_size", std::to_string(qgan.batch_size));
            items.emplace_back("training.lr_generator", format_double(qgan.lr_generator));
            items.emplace_back("training.lr_discriminator", format_double(qgan.lr_discriminator));
            items.emplace_back("training.adam_beta1", format_double(qgan.adam_beta1));
            items.emplace_back("training.adam_beta2", format_double(qgan.adam_beta2));
            items.emplace_back("training.adam_eps", format_double(qgan.adam_eps));
            items.emplace_back("training.disc_hidden", format_int_list(qgan.disc_hidden));
            items.emplace_back("training.max_epochs", std::to_string(qgan.max_epochs));
            break;
        case TrainingMethod::Inference:
            items.emplace_back("training.params_file", params_file);
            break;
    }
    items.emplace_back("training.kl_report", kl_column_name(kl_report));
    if (sweep) {
        items.emplace_back("sweep.parameter", sweep->parameter);
        std::ostringstream vals;
        for (std::size_t i = 0; i < sweep->values.size(); ++i) {
            if (i > 0) vals << ',';
            vals << format_double(sweep->values[i]);
        }
        items.emplace_back("sweep.values", vals.str());
    }
    return items;
}

std::uint64_t BenchmarkConfig::hash() const {
    auto items = canonical_items();
    std::sort(items.begin(), items.end());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& [key, value] : items) {
        if (key == "application.master_seed") continue;
        h = util::fnv1a(key, h);
        h = util::fnv1a("=", h);
        h = util::fnv1a(value, h);
        h = util::fnv1a("\n", h);
    }
    return h;
}

std::string BenchmarkConfig::hash_hex() const { return util::hex64(hash()); }

TargetDistribution BenchmarkConfig::build_target() const {
    if (dataset.kind == DatasetKind::Parity) return generate_parity_dataset(n_qubits, dataset.parity);
    ContinuousDataset ds = generate_x_dataset(dataset.n_points, dataset.jitter_std, dataset.seed);
    ds = transform == TransformKind::PIT ? pit_transform(ds) : minmax_transform(ds);
    return discretize(ds, n_qubits, transform);
}

std::vector<BenchmarkConfig> BenchmarkConfig::materialize_sweep() const {
    if (!sweep) return {*this};
    std::vector<BenchmarkConfig> points;
    points.reserve(sweep->values.size());
    for (const double value : sweep->values) {
        BenchmarkConfig point = *this;
        point.sweep.reset();
        point.applied_sweep = {sweep->parameter, value};
        if (sweep->parameter == "backend.readout") {
            point.noise.p01 = value;
            point.noise.p10 = value;
        } else if (sweep->parameter == "backend.p_depol_2q") {
            point.noise.p_depol_2q = value;
        } else if (sweep->parameter == "backend.p_depol_1q") {
            point.noise.p_depol_1q = value;
        } else if (sweep->parameter == "backend.amp_damping") {
            point.noise.amp_damping = value;
        } else if (sweep->parameter == "backend.phase_damping") {
            point.noise.phase_damping = value;
        } else if (sweep->parameter == "backend.n_shots") {
            if (!(value >= 1.0)) throw validation_error("sweep over backend.n_shots needs values >= 1");
            point.n_shots = static_cast<std::uint64_t>(value);
            point.qcbm.n_shots = point.n_shots;
        } else {
            throw validation_error("sweep.parameter '" + sweep->parameter + "' is not sweepable");
        }
        points.push_back(std::move(point));
    }
    return points;
}

BenchmarkConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    BenchmarkConfig cfg;
    NoiseModel inline_noise;
    bool set_p01 = false, set_p10 = false, set_d2 = false, set_d1 = false, set_ad = false, set_pd = false;
    std::optional<std::string> sweep_parameter;
    std::vector<double> sweep_values;
    std::set<std::string> seen;

    for (const auto& [key, value] : util::parse_kv_lines(text, "config")) {
        if (!seen.insert(key).second) throw validation_error("config: duplicate key '" + key + "'");
        if (key == "application.n_qubits") {
            cfg.n_qubits = static_cast<int>(util::parse_int(value, key));
        } else if (key == "application.repetitions") {
            cfg.repetitions = static_cast<int>(util::parse_int(value, key));
        } else if (key == "application.master_seed") {
            cfg.master_seed = util::parse_uint64(value, key);
        } else if (key == "dataset.kind") {
            cfg.dataset.kind = dataset_kind_from_name(value);
        } else if (key == "dataset.n_points") {
            cfg.dataset.n_points = util::parse_uint64(value, key);
        } else if (key == "dataset.jitter_std") {
            cfg.dataset.jitter_std = util::parse_double(value, key);
        } else if (key == "dataset.seed") {
            cfg.dataset.seed = util::parse_uint64(value, key);
        } else if (key == "dataset.parity") {
            cfg.dataset.parity = static_cast<int>(util::parse_int(value, key));
        } else if (key == "transform.kind") {
            cfg.transform = transform_from_name(value);
        } else if (key == "circuit.kind") {
            if (value != "copula") throw validation_error("circuit.kind: only 'copula' is available");
        } else if (key == "circuit.depth") {
            cfg.circuit_depth = static_cast<int>(util::parse_int(value, key));
        } else if (key == "backend.mode") {
            cfg.backend_mode = backend_from_name(value);
        } else if (key == "backend.n_shots") {
            cfg.n_shots = util::parse_uint64(value, key);
        } else if (key == "backend.profile") {
            cfg.profile_path = value;
        } else if (key == "backend.p01") {
            inline_noise.p01 = util::parse_double(value, key);
            set_p01 = true;
        } else if (key == "backend.p10") {
            inline_noise.p10 = util::parse_double(value, key);
            set_p10 = true;
        } else if (key == "backend.p_depol_2q") {
            inline_noise.p_depol_2q = util::parse_double(value, key);
            set_d2 = true;
        } else if (key == "backend.p_depol_1q") {
            inline_noise.p_depol_1q = util::parse_double(value, key);
            set_d1 = true;
        } else if (key == "backend.amp_damping") {
            inline_noise.amp_damping = util::parse_double(value, key);
            set_ad = true;
        } else if (key == "backend.phase_damping") {
            inline_noise.phase_damping = util::parse_double(value, key);
            set_pd = true;
        } else if (key == "training.method") {
            cfg.method = training_method_from_name(value);
        } else if (key == "training.population") {
            cfg.qcbm.population = static_cast<int>(util::parse_int(value, key));
        } else if (key == "training.sigma0") {
            cfg.qcbm.sigma0 = util::parse_double(value, key);
        } else if (key == "training.max_generations") {
            cfg.qcbm.max_generations = static_cast<int>(util::parse_int(value, key));
        } else if (key == "training.batch_size") {
            cfg.qgan.batch_size = static_cast<int>(util::parse_int(value, key));
        } else if (key == "training.lr_generator") {
            cfg.qgan.lr_generator = util::parse_double(value, key);
        } else if (key == "training.lr_discriminator") {
            cfg.qgan.lr_discriminator = util::parse_double(value, key);
        } else if (key == "training.adam_beta1") {
            cfg.qgan.adam_beta1 = util::parse_double(value, key);
        } else if (key == "training.adam_beta2") {
            cfg.qgan.adam_beta2 = util::parse_double(value, key);
        } else if (key == "training.adam_eps") {
            cfg.qgan.adam_eps = util::parse_double(value, key);
        } else if (key == "training.disc_hidden") {
            cfg.qgan.disc_hidden = parse_int_list(value, key);
        } else if (key == "training.max_epochs") {
            cfg.qgan.max_epochs = static_cast<int>(util::parse_int(value, key));
        } else if (key == "training.params_file") {
            cfg.params_file = value;
        } else if (key == "training.kl_report") {
            cfg.kl_report = kl_column_from_name(value);
        } else if (key == "sweep.parameter") {
            sweep_parameter = value;
        } else if (key == "sweep.values") {
            for (const std::string& part : util::split(value, ',')) {
                if (!part.empty()) sweep_values.push_back(util::parse_double(part, key));
            }
        } else {
            throw validation_error("config: unknown key '" + key + "'");
        }
    }
    if (!seen.contains("application.n_qubits"))
        throw validation_error("config: missing required key 'application.n_qubits'");

    if (cfg.profile_path) {
        std::filesystem::path p{*cfg.profile_path};
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        cfg.profile_path = p.string();
        cfg.noise = load_profile_file(p).noise;
    }
    if (set_p01) cfg.noise.p01 = inline_noise.p01;
    if (set_p10) cfg.noise.p10 = inline_noise.p10;
    if (set_d2) cfg.noise.p_depol_2q = inline_noise.p_depol_2q;
    if (set_d1) cfg.noise.p_depol_1q = inline_noise.p_depol_1q;
    if (set_ad) cfg.noise.amp_damping = inline_noise.amp_damping;
    if (set_pd) cfg.noise.phase_damping = inline_noise.phase_damping;

    if (sweep_parameter || !sweep_values.empty()) {
        if (!sweep_parameter || sweep_values.empty())
            throw validation_error("config: sweep needs both sweep.parameter and sweep.values");
        cfg.sweep = SweepSpec{*sweep_parameter, sweep_values};
    }

    cfg.qcbm.n_shots = cfg.n_shots;
    cfg.validate();
    return cfg;
}

BenchmarkConfig load_config_file(const std::filesystem::path& path) {
    return parse_config(util::read_text_file(path.string()), path.parent_path());
}

}  // namespace qgb
