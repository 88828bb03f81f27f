#include "sdf/experiments/sweep.hpp"

#include <algorithm>
#include <limits>

#include "sdf/experiments/errors.hpp"

namespace sdf::experiments {
namespace {

__extension__ using Wide = __int128;

struct ScaledPoint {
  Index cells;
  Count n;
  ResolvedEstimator est;
};

Count max_width(const GroupingScheme& s) {
  Count w = 0;
  for (Index j = 0; j < s.groups(); ++j) w = std::max(w, s.width(j));
  return w;
}

void check_direction(const ScaledPoint& a, const ScaledPoint& b, Count scale_a, Count scale_b) {
  const std::string field = "estimators[" + a.est.label + "]";
  const std::string step = " between scales " + std::to_string(scale_a) + " and " +
                           std::to_string(scale_b);
  if (const auto* ga = std::get_if<GroupingScheme>(&a.est.method)) {
    const auto& gb = std::get<GroupingScheme>(b.est.method);
    // m/n must shrink: m_b n_a < m_a n_b.
    if (!(Wide(gb.groups()) * a.n < Wide(ga->groups()) * b.n)) {
      throw ConfigError(field, "group count m must grow slower than n" + step);
    }
    // max width / M must shrink.
    if (!(Wide(max_width(gb)) * a.cells < Wide(max_width(*ga)) * b.cells)) {
      throw ConfigError(field, "largest group width / M must shrink" + step);
    }
  } else if (const auto* ka = std::get_if<KernelSpec>(&a.est.method)) {
    const auto& kb = std::get<KernelSpec>(b.est.method);
    if (!(kb.bandwidth() > ka->bandwidth())) {
      throw ConfigError(field, "bandwidth k must grow" + step);
    }
    if (Wide(kb.bandwidth()) * a.cells > Wide(ka->bandwidth()) * b.cells) {
      throw ConfigError(field, "k/M must not grow" + step);
    }
    // M/(n k) must shrink: M_b n_a k_a < M_a n_b k_b.
    if (!(Wide(b.cells) * a.n * ka->bandwidth() < Wide(a.cells) * b.n * kb.bandwidth())) {
      throw ConfigError(field, "M/(n k) must shrink" + step);
    }
  }
}

}  // namespace

void validate_sweep(const ScenarioConfig& base, const std::vector<Count>& scales) {
  validate(base);
  if (scales.empty()) throw ConfigError("scales", "at least one scale required");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] < 1) throw ConfigError("scales", "multipliers must be positive integers");
    if (i > 0 && scales[i] <= scales[i - 1]) {
      throw ConfigError("scales", "multipliers must be strictly increasing");
    }
    const Count limit = std::numeric_limits<std::int32_t>::max();
    if (base.cells > limit / scales[i] || base.n > limit / scales[i]) {
      throw ConfigError("scales", "scaled M or n too large");
    }
  }
  for (const auto& spec : base.estimators) {
    std::vector<ScaledPoint> points;
    for (Count s : scales) {
      const Index cells = base.cells * s;
      points.push_back({cells, base.n * s, resolve_estimator(spec, cells)});
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
      check_direction(points[i - 1], points[i], scales[i - 1], scales[i]);
    }
  }
}

SweepTable sweep_rows(const ScenarioResult& result, Count scale) {
  SweepTable table;
  for (const auto& s : result.summaries) {
    table.rows.push_back({scale, result.cells, result.n, s.estimator, s.l1_to_F.median,
                          s.l1_to_F.mean, s.l1_to_F.stderr_});
  }
  return table;
}

SweepTable consistency_sweep(const ScenarioConfig& base, const std::vector<Count>& scales) {
  validate_sweep(base, scales);
  SweepTable table;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    ScenarioConfig cfg = base;
    cfg.cells = base.cells * scales[i];
    cfg.n = base.n * scales[i];
    const ScenarioResult result = run_scenario(cfg, static_cast<std::uint32_t>(i));
    for (auto& row : sweep_rows(result, scales[i]).rows) table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace sdf::experiments
