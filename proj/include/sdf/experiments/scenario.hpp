#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdf/core/grouping.hpp"
#include "sdf/core/kernel.hpp"
#include "sdf/core/step_cdf.hpp"
#include "sdf/core/step_density.hpp"
#include "sdf/experiments/reference.hpp"
#include "sdf/sampling/coupling.hpp"

namespace sdf::experiments {

/// Integer smoothing parameter (group size or bandwidth) as a function of M.
struct SizeRule {
  enum class Mode {
    fixed,    // value
    sqrt,     // ceil(sqrt(M))
    divisor,  // ceil(M / value)
  };
  Mode mode = Mode::fixed;
  Count value = 1;

  Count resolve(Index cells) const;
  std::string describe() const;
};

enum class EstimatorKind { natural, grouped, kernel };

/// One configured estimator. Grouped estimators take either `size` or
/// explicit `breaks`; kernel estimators take `size` as the bandwidth.
struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::natural;
  std::optional<SizeRule> size;
  std::optional<Counts> breaks;
  KernelType kernel = KernelType::box;
  std::string label;  // derived from the settings when empty

  std::string display_label() const;
};

/// An estimator bound to a concrete M.
struct ResolvedEstimator {
  std::string label;
  std::variant<std::monostate, GroupingScheme, KernelSpec> method;
};

ResolvedEstimator resolve_estimator(const EstimatorSpec& spec, Index cells);

struct ScenarioConfig {
  Index cells = 1000;  // M
  Count n = 2000;
  Parent parent = Parent::paper_quintic();
  std::vector<EstimatorSpec> estimators;
  Count replicates = 20;
  std::uint64_t seed = 0;
  std::vector<double> eval_grid;
  Count designated_replicate = 0;
  /// Draw each replicate as a coupled (x, y) pair and record the coupling
  /// check; x is then the replicate's multinomial sample.
  bool coupling = false;
  /// Poissonized replicates for inconsistency_diagnostics; 0 means
  /// `replicates`.
  Count diagnostic_replicates = 0;
  /// Worker threads; 0 picks the hardware concurrency. Results do not
  /// depend on it.
  unsigned threads = 0;
};

/// Throws ConfigError naming the offending field.
void validate(const ScenarioConfig& cfg);

struct ReplicateRecord {
  Count replicate = 0;
  std::string estimator;
  double l1_to_FM = 0.0;
  double l1_to_F = 0.0;
  double sup_to_F = 0.0;
  double second_moment = 0.0;
};

struct Summary {
  double median = 0.0;
  double mean = 0.0;
  double stderr_ = 0.0;  // sample standard deviation / sqrt(count)
};

Summary summarize(std::vector<double> values);

struct EstimatorSummary {
  std::string estimator;
  Summary l1_to_F;
  Summary l1_to_FM;
  Summary second_moment;
};

struct NamedCdf {
  std::string label;
  StepCdf cdf;
};

struct NamedDensity {
  std::string label;
  StepDensity density;
};

struct ScenarioResult {
  Index cells = 0;
  Count n = 0;
  /// Sorted by replicate, then configured estimator order.
  std::vector<ReplicateRecord> records;
  std::vector<EstimatorSummary> summaries;
  /// Designated replicate: the counts, each estimator's CDF and parent
  /// estimate, preceded by the target F_M / g_M under the label "F_M".
  Counts designated_counts;
  std::vector<NamedCdf> sdf_dumps;
  std::vector<NamedDensity> density_dumps;
  /// One entry per replicate when cfg.coupling is set.
  std::vector<sampling::CouplingCheck> coupling;
};

/// Stream experiment ids used by the runners. Sweeps use the scale index as
/// experiment id.
inline constexpr std::uint32_t kDiagnosticsStream = 0x80000001u;
inline constexpr std::uint32_t kCouplingStream = 0x80000002u;

/// Records of a single replicate; run_scenario is exactly the collection of
/// these over all replicate indices.
std::vector<ReplicateRecord> run_replicate(const ScenarioConfig& cfg, Count replicate,
                                           std::uint32_t experiment = 0);

ScenarioResult run_scenario(const ScenarioConfig& cfg, std::uint32_t experiment = 0);

/// Recomputes per-estimator summaries from records.
std::vector<EstimatorSummary> aggregate(const std::vector<ReplicateRecord>& records,
                                        const std::vector<std::string>& estimator_order);

}  // namespace sdf::experiments
