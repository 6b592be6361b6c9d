#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

namespace simplikit {

/// Parses the TOML subset used by simplikit config files: tables, arrays of
/// tables, dotted keys, strings, integers, floats, booleans, arrays and
/// inline tables. Dates are not supported. Throws ConfigError.
nlohmann::json parse_toml(std::string_view text);

/// Loads a .json or .toml file into a JSON object. Throws ConfigError.
nlohmann::json load_config_file(const std::filesystem::path& path);

}  // namespace simplikit
