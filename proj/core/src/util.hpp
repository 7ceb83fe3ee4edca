#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgb::util {

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

double parse_double(std::string_view s, const std::string& context);
std::int64_t parse_int(std::string_view s, const std::string& context);
std::uint64_t parse_uint64(std::string_view s, const std::string& context);

/// Shortest round-trippable decimal form (17 significant digits).
std::string format_double(double v);

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

std::string iso8601_utc_now();

/// key = value lines with '#' comments; blank lines skipped.
std::vector<std::pair<std::string, std::string>> parse_kv_lines(std::string_view text, const std::string& context);

std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace qgb::util
