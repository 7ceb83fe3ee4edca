#pragma once

namespace qgb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qgb
