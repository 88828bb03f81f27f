#include "sdf/experiments/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "parallel.hpp"
#include "sdf/core/distances.hpp"
#include "sdf/core/estimators.hpp"
#include "sdf/core/moments.hpp"
#include "sdf/core/population.hpp"
#include "sdf/experiments/errors.hpp"
#include "sdf/sampling/variates.hpp"

namespace sdf::experiments {

Count SizeRule::resolve(Index cells) const {
  switch (mode) {
    case Mode::fixed: return value;
    case Mode::sqrt: {
      auto r = static_cast<Count>(std::sqrt(static_cast<double>(cells)));
      while (r * r > cells) --r;
      while (r * r < cells) ++r;
      return r;
    }
    case Mode::divisor: return (cells + value - 1) / value;
  }
  return value;
}

std::string SizeRule::describe() const {
  switch (mode) {
    case Mode::fixed: return "k" + std::to_string(value);
    case Mode::sqrt: return "sqrt";
    case Mode::divisor: return "div" + std::to_string(value);
  }
  return "?";
}

std::string EstimatorSpec::display_label() const {
  if (!label.empty()) return label;
  switch (kind) {
    case EstimatorKind::natural: return "natural";
    case EstimatorKind::grouped:
      return breaks ? "grouped_breaks" : "grouped_" + (size ? size->describe() : std::string("?"));
    case EstimatorKind::kernel:
      return "kernel_" + std::string(kernel_name(kernel)) + "_" +
             (size ? size->describe() : std::string("?"));
  }
  return "?";
}

ResolvedEstimator resolve_estimator(const EstimatorSpec& spec, Index cells) {
  const std::string label = spec.display_label();
  const std::string field = "estimators[" + label + "]";
  if (spec.size && spec.size->mode != SizeRule::Mode::sqrt && spec.size->value < 1) {
    throw ConfigError(field, "size parameter must be at least 1");
  }
  switch (spec.kind) {
    case EstimatorKind::natural:
      if (spec.size || spec.breaks) throw ConfigError(field, "natural estimator takes no parameters");
      return {label, std::monostate{}};
    case EstimatorKind::grouped: {
      if (spec.size.has_value() == spec.breaks.has_value()) {
        throw ConfigError(field, "grouped estimator needs exactly one of a group size or breaks");
      }
      if (spec.breaks) {
        try {
          GroupingScheme scheme(*spec.breaks);
          if (scheme.cells() != cells) {
            throw ConfigError(field, "breaks end at " + std::to_string(scheme.cells()) +
                                         " but M = " + std::to_string(cells));
          }
          return {label, scheme};
        } catch (const ArgumentError& e) {
          throw ConfigError(field, e.what());
        }
      }
      const Count size = spec.size->resolve(cells);
      if (size > cells) {
        throw ConfigError(field, "group size " + std::to_string(size) + " exceeds M = " +
                                     std::to_string(cells));
      }
      return {label, GroupingScheme::equal_size(cells, size)};
    }
    case EstimatorKind::kernel:
      if (!spec.size || spec.breaks) throw ConfigError(field, "kernel estimator needs a bandwidth");
      return {label, KernelSpec(spec.kernel, spec.size->resolve(cells))};
  }
  throw ConfigError(field, "unknown estimator kind");
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.cells < 1) throw ConfigError("M", "must be at least 1");
  if (cfg.n < 1) throw ConfigError("n", "must be at least 1");
  if (cfg.replicates < 1) throw ConfigError("replicates", "must be at least 1");
  if (cfg.designated_replicate < 0 || cfg.designated_replicate >= cfg.replicates) {
    throw ConfigError("designated_replicate", "must lie in [0, replicates)");
  }
  if (cfg.diagnostic_replicates < 0) throw ConfigError("diagnostic_replicates", "must be >= 0");
  if (cfg.replicates > 0xFFFFFFFFll || cfg.diagnostic_replicates > 0xFFFFFFFFll) {
    throw ConfigError("replicates", "at most 2^32 - 1 replicates per experiment");
  }
  if (cfg.estimators.empty()) throw ConfigError("estimators", "at least one estimator required");
  std::set<std::string> seen;
  for (const auto& spec : cfg.estimators) {
    const ResolvedEstimator r = resolve_estimator(spec, cfg.cells);
    if (r.label.find_first_of(",\"\n\r") != std::string::npos || r.label == "F_M") {
      throw ConfigError("estimators", "label '" + r.label + "' is reserved or not CSV-safe");
    }
    if (!seen.insert(r.label).second) {
      throw ConfigError("estimators", "duplicate estimator label '" + r.label + "'");
    }
  }
  for (double x : cfg.eval_grid) {
    if (!std::isfinite(x)) throw ConfigError("eval_grid", "grid points must be finite");
  }
}

Summary summarize(std::vector<double> values) {
  Summary s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  s.median = k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
  sdf::detail::CompensatedSum<double> sum;
  for (double v : values) sum.add(v);
  s.mean = sum.value() / static_cast<double>(k);
  if (k > 1) {
    sdf::detail::CompensatedSum<double> sq;
    for (double v : values) sq.add((v - s.mean) * (v - s.mean));
    s.stderr_ = std::sqrt(sq.value() / static_cast<double>(k - 1) / static_cast<double>(k));
  }
  return s;
}

std::vector<EstimatorSummary> aggregate(const std::vector<ReplicateRecord>& records,
                                        const std::vector<std::string>& estimator_order) {
  std::vector<EstimatorSummary> out;
  for (const auto& label : estimator_order) {
    std::vector<double> l1f;
    std::vector<double> l1fm;
    std::vector<double> m2;
    for (const auto& r : records) {
      if (r.estimator != label) continue;
      l1f.push_back(r.l1_to_F);
      l1fm.push_back(r.l1_to_FM);
      m2.push_back(r.second_moment);
    }
    out.push_back({label, summarize(std::move(l1f)), summarize(std::move(l1fm)),
                   summarize(std::move(m2))});
  }
  return out;
}

namespace {

struct Prepared {
  CellProbabilities<double> probs;
  StepCdf target;
  LimitTarget limit;
  std::vector<ResolvedEstimator> estimators;
};

Prepared prepare(const ScenarioConfig& cfg) {
  validate(cfg);
  CellProbabilities<double> probs = cfg.parent.cell_probs(cfg.cells);
  StepCdf target = structural_df(probs);
  std::vector<ResolvedEstimator> estimators;
  for (const auto& spec : cfg.estimators) estimators.push_back(resolve_estimator(spec, cfg.cells));
  return {std::move(probs), std::move(target), cfg.parent.limit(), std::move(estimators)};
}

StepDensity estimate_density(const ResolvedEstimator& est, const Counts& counts, Count n) {
  return std::visit(
      [&](const auto& method) -> StepDensity {
        using T = std::decay_t<decltype(method)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return natural_parent_estimate(counts, n);
        } else if constexpr (std::is_same_v<T, GroupingScheme>) {
          return grouped_parent_estimate(counts, n, method);
        } else {
          return kernel_parent_estimate(counts, n, method);
        }
      },
      est.method);
}

struct ReplicateOutput {
  std::vector<ReplicateRecord> records;
  std::optional<sampling::CouplingCheck> coupling;
  Counts counts;
  std::vector<NamedCdf> cdfs;
  std::vector<NamedDensity> densities;
};

ReplicateOutput replicate(const ScenarioConfig& cfg, const Prepared& prep, Count index,
                          std::uint32_t experiment, bool keep_dumps) {
  ReplicateOutput out;
  auto rng = sampling::SeededRng::stream(cfg.seed, experiment, static_cast<std::uint32_t>(index));
  if (cfg.coupling) {
    const sampling::CountsPair pair = sampling::sample_coupled(prep.probs, cfg.n, rng);
    out.coupling = sampling::coupling_l1_bound(pair);
    out.counts = pair.x;
  } else {
    out.counts = sampling::sample_multinomial(prep.probs, cfg.n, rng);
  }
  for (const auto& est : prep.estimators) {
    StepDensity density = estimate_density(est, out.counts, cfg.n);
    StepCdf cdf = sdf_of_density(density);
    out.records.push_back({index, est.label, l1_distance(cdf, prep.target),
                           l1_to_limit(cdf, prep.limit), sup_to_limit(cdf, prep.limit),
                           second_moment(cdf)});
    if (keep_dumps) {
      out.cdfs.push_back({est.label, std::move(cdf)});
      out.densities.push_back({est.label, std::move(density)});
    }
  }
  return out;
}

}  // namespace

std::vector<ReplicateRecord> run_replicate(const ScenarioConfig& cfg, Count index,
                                           std::uint32_t experiment) {
  const Prepared prep = prepare(cfg);
  if (index < 0 || index >= cfg.replicates) throw ConfigError("replicate", "index out of range");
  return replicate(cfg, prep, index, experiment, false).records;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, std::uint32_t experiment) {
  const Prepared prep = prepare(cfg);
  std::vector<ReplicateOutput> outputs(static_cast<std::size_t>(cfg.replicates));
  detail::parallel_for(outputs.size(), cfg.threads, [&](std::size_t i) {
    const auto index = static_cast<Count>(i);
    outputs[i] = replicate(cfg, prep, index, experiment, index == cfg.designated_replicate);
  });

  ScenarioResult result;
  result.cells = cfg.cells;
  result.n = cfg.n;
  for (auto& out : outputs) {
    for (auto& rec : out.records) result.records.push_back(std::move(rec));
    if (out.coupling) result.coupling.push_back(*out.coupling);
  }
  std::vector<std::string> order;
  for (const auto& est : prep.estimators) order.push_back(est.label);
  result.summaries = aggregate(result.records, order);

  auto& designated = outputs[static_cast<std::size_t>(cfg.designated_replicate)];
  result.designated_counts = std::move(designated.counts);
  result.sdf_dumps.push_back({"F_M", prep.target});
  result.density_dumps.push_back({"F_M", parent_density(prep.probs)});
  for (auto& c : designated.cdfs) result.sdf_dumps.push_back(std::move(c));
  for (auto& d : designated.densities) result.density_dumps.push_back(std::move(d));
  return result;
}

}  // namespace sdf::experiments
