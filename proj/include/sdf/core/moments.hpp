#pragma once

#include <cmath>
#include <limits>

#include "sdf/core/cell_probabilities.hpp"
#include "sdf/core/estimators.hpp"
#include "sdf/core/step_cdf.hpp"
#include "sdf/core/types.hpp"

namespace sdf {

/// Integral of x^2 dF for a step CDF.
template <typename Scalar>
Scalar second_moment(const BasicStepCdf<Scalar>& f) {
  detail::CompensatedSum<Scalar> acc;
  for (Index i = 0; i < f.size(); ++i) acc.add(f.mass(i) * f.knots()(i) * f.knots()(i));
  return acc.value();
}

/// P(Y <= k) for Y ~ Poisson(mean), by direct summation of the mass function.
inline double poisson_cdf(Count k, double mean) {
  if (k < 0) return 0.0;
  if (mean <= 0.0) return 1.0;
  if (static_cast<double>(k) >= mean + 40.0 * std::sqrt(mean) + 40.0) return 1.0;
  const double log_mean = std::log(mean);
  detail::CompensatedSum<double> acc;
  for (Count j = 0; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    acc.add(std::exp(-mean + jd * log_mean - std::lgamma(jd + 1.0)));
  }
  return std::min(acc.value(), 1.0);
}

/// Largest count c with (M/n) c <= x under the estimators' own rounding, or
/// -1 when x lies below every attainable value.
inline Count largest_count_at_or_below(Index cells, Count n, double x) {
  if (!(x >= 0.0)) return -1;
  const double cap = static_cast<double>(n) + 40.0 * std::sqrt(static_cast<double>(n)) + 40.0;
  const double guess = std::floor(static_cast<double>(n) * x / static_cast<double>(cells));
  if (guess >= cap) return static_cast<Count>(cap);
  auto value = [&](Count c) {
    return detail::scaled_height<double>(cells, static_cast<double>(c),
                                         static_cast<double>(n) * 1.0);
  };
  Count c = static_cast<Count>(guess);
  while (c >= 0 && value(c) > x) --c;
  while (value(c + 1) <= x) ++c;
  return c;
}

/// E F~_M(x) = (1/M) sum_i P((M/n) Y_i <= x) with independent
/// Y_i ~ Poisson(n p_i): the mean of the natural estimator applied to
/// Poissonized counts.
inline double poisson_mixture_expectation(const CellProbabilities<double>& p, Count n, double x) {
  if (n < 1) throw ArgumentError("poisson_mixture_expectation: n must be positive");
  if (std::isnan(x)) throw ArgumentError("poisson_mixture_expectation: x is NaN");
  const Count c = largest_count_at_or_below(p.cells(), n, x);
  if (c < 0) return 0.0;
  detail::CompensatedSum<double> acc;
  for (Index i = 0; i < p.cells(); ++i) acc.add(poisson_cdf(c, static_cast<double>(n) * p[i]));
  return std::min(acc.value() / static_cast<double>(p.cells()), 1.0);
}

}  // namespace sdf
