#pragma once

#include <string>
#include <vector>

#include "sdf/experiments/scenario.hpp"

namespace sdf::experiments {

/// One Monte Carlo check against an exact value.
struct DiagnosticRow {
  std::string check;
  std::string x_or_label;
  double monte_carlo_value = 0.0;
  double exact_value = 0.0;
  double stderr_ = 0.0;

  /// |monte_carlo - exact| <= sigmas * stderr. Rows without an exact value
  /// (NaN) pass trivially.
  bool within(double sigmas = 4.0) const;
};

struct DiagnosticsRecord {
  std::vector<DiagnosticRow> rows;
  Count poissonized_replicates = 0;
  Count coupling_draws = 0;
  Count coupling_violations = 0;
};

/// Poissonized-sample checks of the natural estimator's inconsistency:
///   second_moment  mean of integral x^2 dF~_M vs M/n + integral x^2 dF_M
///                  (sample standard error);
///   expectation    mean of F~_M(x) at each eval_grid point vs
///                  poisson_mixture_expectation (exact-variance standard
///                  error);
///   coupling_*     |N - n| / M over coupled draws: mean vs the exact
///                  E|N - n| / M, median, and the count of invariant
///                  violations (exact value 0).
DiagnosticsRecord inconsistency_diagnostics(const ScenarioConfig& cfg);

/// E|N - n| for N ~ Poisson(n): 2 e^{-n} n^{n+1} / n!.
double poisson_mean_absolute_deviation(Count n);

}  // namespace sdf::experiments
