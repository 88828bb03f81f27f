#pragma once

#include <vector>

#include "sdf/experiments/scenario.hpp"

namespace sdf::experiments {

struct SweepRow {
  Count scale = 1;
  Index cells = 0;
  Count n = 0;
  std::string estimator;
  double median_l1 = 0.0;
  double mean_l1 = 0.0;
  double stderr_l1 = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Checks that the scale schedule moves every smoothed estimator in the
/// direction its consistency conditions require:
///   grouped: m/n and max group width / M strictly decrease;
///   kernel:  k strictly increases, k/M does not increase, M/(nk) strictly
///            decreases.
/// Throws ConfigError otherwise.
void validate_sweep(const ScenarioConfig& base, const std::vector<Count>& scales);

/// Runs the scenario at (M s, n s) for each multiplier s and reports the
/// L1-to-F summaries. Scale index i uses stream experiment id i.
SweepTable consistency_sweep(const ScenarioConfig& base, const std::vector<Count>& scales);

/// The single-scale table of a finished scenario (scale 1).
SweepTable sweep_rows(const ScenarioResult& result, Count scale = 1);

}  // namespace sdf::experiments
