#include "qgb/profile.hpp"

#include "qgb/errors.hpp"
#include "util.hpp"

namespace qgb {

BackendProfile load_profile(std::string_view text) {
    BackendProfile profile;
    bool seen_basis = false;
    for (const auto& [key, value] : util::parse_kv_lines(text, "profile")) {
        if (key == "name") {
            profile.name = value;
        } else if (key == "basis_gates") {
            for (const std::string& g : util::split(value, ',')) {
                if (!g.empty()) profile.basis_gates.push_back(gate_kind_from_name(g));
            }
            seen_basis = true;
        } else if (key == "p01") {
            profile.noise.p01 = util::parse_double(value, "profile.p01");
        } else if (key == "p10") {
            profile.noise.p10 = util::parse_double(value, "profile.p10");
        } else if (key == "p_depol_2q") {
            profile.noise.p_depol_2q = util::parse_double(value, "profile.p_depol_2q");
        } else if (key == "p_depol_1q") {
            profile.noise.p_depol_1q = util::parse_double(value, "profile.p_depol_1q");
        } else if (key == "amp_damping") {
            profile.noise.amp_damping = util::parse_double(value, "profile.amp_damping");
        } else if (key == "phase_damping") {
            profile.noise.phase_damping = util::parse_double(value, "profile.phase_damping");
        } else if (key == "coupling_map") {
            for (const std::string& pair : util::split(value, ';')) {
                if (pair.empty()) continue;
                const auto dash = pair.find('-');
                if (dash == std::string::npos)
                    throw validation_error("profile.coupling_map: expected 'i-j', got '" + pair + "'");
                const int a = static_cast<int>(util::parse_int(pair.substr(0, dash), "profile.coupling_map"));
                const int b = static_cast<int>(util::parse_int(pair.substr(dash + 1), "profile.coupling_map"));
                if (a < 0 || b < 0 || a == b) throw validation_error("profile.coupling_map: bad pair '" + pair + "'");
                profile.coupling_map.emplace_back(a, b);
            }
        } else {
            throw validation_error("profile: unknown key '" + key + "'");
        }
    }
    if (!seen_basis || profile.basis_gates.empty())
        throw validation_error("profile: basis_gates must be present and non-empty");
    profile.noise.validate();
    return profile;
}

BackendProfile load_profile_file(const std::filesystem::path& path) {
    return load_profile(util::read_text_file(path.string()));
}

}  // namespace qgb
