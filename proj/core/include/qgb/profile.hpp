#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgb/circuit.hpp"
#include "qgb/noise_model.hpp"

namespace qgb {

/// Static snapshot of a hardware backend: error rates, basis gates and
/// connectivity. The coupling map is stored but not enforced; circuits
/// assume all-to-all connectivity.
struct BackendProfile {
    std::string name;
    std::vector<GateKind> basis_gates;
    NoiseModel noise;
    std::vector<std::pair<int, int>> coupling_map;
};

/// Parses the flat `key = value` profile format ('#' comments). Keys:
/// name, basis_gates (comma-separated), p01, p10, p_depol_2q, p_depol_1q,
/// amp_damping, phase_damping, coupling_map (semicolon-separated i-j
/// pairs). Unknown keys are rejected.
BackendProfile load_profile(std::string_view text);

BackendProfile load_profile_file(const std::filesystem::path& path);

}  // namespace qgb
