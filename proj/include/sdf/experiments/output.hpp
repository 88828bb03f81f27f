#pragma once

#include <filesystem>
#include <vector>

#include "sdf/experiments/diagnostics.hpp"
#include "sdf/experiments/scenario.hpp"
#include "sdf/experiments/sweep.hpp"

namespace sdf::experiments {

/// File names inside an output directory.
inline constexpr const char* kReplicatesCsv = "replicates.csv";
inline constexpr const char* kSdfKnotsCsv = "sdf_knots.csv";
inline constexpr const char* kDensityKnotsCsv = "density_knots.csv";
inline constexpr const char* kSweepCsv = "sweep.csv";
inline constexpr const char* kDiagnosticsCsv = "diagnostics.csv";

/// Writes replicates.csv, sdf_knots.csv, density_knots.csv and a scale-1
/// sweep.csv into `dir` (created if missing).
void emit_csv(const ScenarioResult& result, const std::filesystem::path& dir);
void emit_csv(const SweepTable& table, const std::filesystem::path& dir);
void emit_csv(const DiagnosticsRecord& record, const std::filesystem::path& dir);

std::vector<ReplicateRecord> read_replicates_csv(const std::filesystem::path& path);
std::vector<NamedCdf> read_sdf_knots_csv(const std::filesystem::path& path);
SweepTable read_sweep_csv(const std::filesystem::path& path);

}  // namespace sdf::experiments
