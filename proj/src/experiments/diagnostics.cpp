#include "sdf/experiments/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "parallel.hpp"
#include "sdf/core/estimators.hpp"
#include "sdf/core/moments.hpp"
#include "sdf/core/population.hpp"
#include "sdf/experiments/csv.hpp"
#include "sdf/sampling/coupling.hpp"
#include "sdf/sampling/variates.hpp"

namespace sdf::experiments {

bool DiagnosticRow::within(double sigmas) const {
  if (std::isnan(exact_value)) return true;
  return std::abs(monte_carlo_value - exact_value) <= sigmas * stderr_;
}

double poisson_mean_absolute_deviation(Count n) {
  if (n < 1) return 0.0;
  const double nd = static_cast<double>(n);
  return 2.0 * std::exp(-nd + (nd + 1.0) * std::log(nd) - std::lgamma(nd + 1.0));
}

DiagnosticsRecord inconsistency_diagnostics(const ScenarioConfig& cfg) {
  validate(cfg);
  const Count reps = cfg.diagnostic_replicates > 0 ? cfg.diagnostic_replicates : cfg.replicates;
  const auto probs = cfg.parent.cell_probs(cfg.cells);
  const StepCdf target = structural_df(probs);
  const std::size_t grid = cfg.eval_grid.size();
  const double M = static_cast<double>(cfg.cells);
  const double n = static_cast<double>(cfg.n);

  // Poissonized replicates: second moment and grid values of F~_M.
  std::vector<double> moments(static_cast<std::size_t>(reps));
  std::vector<std::vector<double>> values(static_cast<std::size_t>(reps));
  detail::parallel_for(moments.size(), cfg.threads, [&](std::size_t b) {
    auto rng = sampling::SeededRng::stream(cfg.seed, kDiagnosticsStream,
                                           static_cast<std::uint32_t>(b));
    const Counts y = sampling::sample_poissonized(probs, cfg.n, rng);
    const StepCdf f = poissonized_estimator(y, cfg.n);
    moments[b] = second_moment(f);
    values[b].reserve(grid);
    for (double x : cfg.eval_grid) values[b].push_back(f(x));
  });

  // Coupled draws.
  std::vector<double> bounds(static_cast<std::size_t>(reps));
  std::vector<char> violated(static_cast<std::size_t>(reps));
  detail::parallel_for(bounds.size(), cfg.threads, [&](std::size_t d) {
    auto rng =
        sampling::SeededRng::stream(cfg.seed, kCouplingStream, static_cast<std::uint32_t>(d));
    const auto check = sampling::coupling_l1_bound(sampling::sample_coupled(probs, cfg.n, rng));
    bounds[d] = check.bound;
    violated[d] = check.holds() ? 0 : 1;
  });

  DiagnosticsRecord rec;
  rec.poissonized_replicates = reps;
  rec.coupling_draws = reps;
  const Summary m2 = summarize(moments);
  rec.rows.push_back({"second_moment", "M/n+second_moment(F_M)", m2.mean,
                      M / n + second_moment(target), m2.stderr_});

  for (std::size_t g = 0; g < grid; ++g) {
    const double x = cfg.eval_grid[g];
    sdf::detail::CompensatedSum<double> sum;
    for (const auto& v : values) sum.add(v[g]);
    const double mc = sum.value() / static_cast<double>(reps);
    // Var F~_M(x) = (1/M^2) sum_i P_i (1 - P_i) with independent Y_i.
    const Count c = largest_count_at_or_below(cfg.cells, cfg.n, x);
    sdf::detail::CompensatedSum<double> var;
    for (Index i = 0; i < probs.cells(); ++i) {
      const double pi = poisson_cdf(c, n * probs[i]);
      var.add(pi * (1.0 - pi));
    }
    const double se = std::sqrt(var.value() / (M * M) / static_cast<double>(reps));
    rec.rows.push_back({"expectation", format_double(x), mc,
                        poisson_mixture_expectation(probs, cfg.n, x), se});
  }

  const Summary bound = summarize(bounds);
  rec.rows.push_back({"coupling_bound_mean", "|N-n|/M", bound.mean,
                      poisson_mean_absolute_deviation(cfg.n) / M, bound.stderr_});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rec.rows.push_back({"coupling_bound_median", "|N-n|/M", bound.median, nan, nan});
  for (char v : violated) rec.coupling_violations += v;
  rec.rows.push_back({"coupling_violations", "count",
                      static_cast<double>(rec.coupling_violations), 0.0, 0.0});
  return rec;
}

}  // namespace sdf::experiments
