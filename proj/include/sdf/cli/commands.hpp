#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "sdf/core/types.hpp"

namespace sdf::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

/// run_scenario + emit_csv (and the diagnostics file when the config has an
/// eval grid); prints the aggregate table.
int cmd_simulate(const RunOptions& opts, std::ostream& out, std::ostream& err);

/// consistency_sweep, writing sweep.csv.
int cmd_sweep(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct EvalRequest {
  enum class What { limit_F, limit_g, mixture };
  What what = What::limit_F;
  std::string x;
  std::string cells;  // mixture only
  std::string n;      // mixture only
  std::string parent = "paper-quintic";
};

/// Prints one value with up to 17 significant digits (shortest round-trip).
int cmd_eval(const EvalRequest& req, std::ostream& out, std::ostream& err);

struct CoupleCheckOptions {
  Count cells = 1000;
  Count n = 2000;
  Count draws = 200;
  std::uint64_t seed = 1;
  std::string parent = "paper-quintic";
  bool quiet = false;
};

/// Draws coupled pairs and verifies the exact coupling invariants on each;
/// exit 1 if any draw violates them.
int cmd_couple_check(const CoupleCheckOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace sdf::cli
