#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sdf/experiments/scenario.hpp"

namespace sdf::cli {

inline constexpr int kSchemaVersion = 1;

enum class ConfigMode { simulate, sweep };

/// Parsed JSON run configuration: the scenario plus output settings and,
/// for sweeps, the scale multipliers.
struct CliConfig {
  experiments::ScenarioConfig scenario;
  std::vector<Count> scales;
  std::filesystem::path out_dir = "out";
  bool quiet = false;
};

/// Strict parse: unknown keys, wrong types and out-of-range values throw
/// experiments::ConfigError whose field is the dotted JSON path; syntax
/// errors report "line L, column C". A relative tabulated-parent path
/// resolves against `base_dir`; out_dir is taken as given.
CliConfig parse_config(const std::string& text, ConfigMode mode,
                       const std::filesystem::path& base_dir = {});

/// Reads and parses a config file. A missing or unreadable file is a
/// ConfigError naming the path.
CliConfig load_config(const std::filesystem::path& path, ConfigMode mode);

/// The defaults document (`defaults.json`), as JSON text.
std::string defaults_json();

}  // namespace sdf::cli
