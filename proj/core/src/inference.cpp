#include "qgb/inference.hpp"

#include <sstream>
#include <string>

#include "qgb/errors.hpp"
#include "util.hpp"

namespace qgb {

ShotHistogram run_inference(const Circuit& circuit, std::span<const double> params, std::uint64_t n_shots,
                            const BackendSpec& backend, RandomStream& rng) {
    circuit.validate();
    if (static_cast<int>(params.size()) != circuit.n_params)
        throw validation_error("inference: parameter file has " + std::to_string(params.size()) +
                               " values, circuit expects " + std::to_string(circuit.n_params));
    if (n_shots == 0) throw validation_error("inference: n_shots must be >= 1");
    return backend_sample(circuit, params, backend, n_shots, rng);
}

void save_params_file(const std::filesystem::path& path, std::span<const double> params) {
    std::ostringstream out;
    out << "n_params=" << params.size() << '\n';
    for (const double p : params) out << util::format_double(p) << '\n';
    util::write_text_file_atomic(path.string(), out.str());
}

std::vector<double> load_params_file(const std::filesystem::path& path) {
    const std::string text = util::read_text_file(path.string());
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw validation_error("params file: empty");
    const std::string_view header = util::trim(line);
    if (!header.starts_with("n_params="))
        throw validation_error("params file: missing n_params header");
    const std::uint64_t expected = util::parse_uint64(header.substr(9), "params file header");
    std::vector<double> params;
    params.reserve(expected);
    while (std::getline(in, line)) {
        const std::string_view v = util::trim(line);
        if (v.empty()) continue;
        params.push_back(util::parse_double(v, "params file"));
    }
    if (params.size() != expected)
        throw validation_error("params file: header announces " + std::to_string(expected) + " values, found " +
                               std::to_string(params.size()));
    return params;
}

}  // namespace qgb
