#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

namespace judgecal::toml {

/// Parses the TOML subset used by judgecal config files into a JSON object
/// tree: [table] / [table.sub] headers, `key = value` pairs, where value is
/// a basic or literal string, integer, float, boolean, or a (possibly
/// multi-line) array of those. Comments and blank lines are skipped.
/// Unsupported TOML (dates, inline tables, table arrays, multi-line strings)
/// raises ConfigError with the line number.
nlohmann::json parse(std::string_view text);

nlohmann::json parse_file(const std::filesystem::path& path);

}  // namespace judgecal::toml
