#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qgb/backend.hpp"
#include "qgb/circuit.hpp"
#include "qgb/pmf.hpp"
#include "qgb/rng.hpp"

namespace qgb {

/// Samples n_shots measurements from the (possibly noisy) model at the
/// stored parameters.
ShotHistogram run_inference(const Circuit& circuit, std::span<const double> params, std::uint64_t n_shots,
                            const BackendSpec& backend, RandomStream& rng);

/// Text format: header line `n_params=<k>`, then one parameter per line
/// with 17 significant digits.
void save_params_file(const std::filesystem::path& path, std::span<const double> params);
std::vector<double> load_params_file(const std::filesystem::path& path);

}  // namespace qgb
