#pragma once

#include <string>

#include "sdf/core/errors.hpp"
#include "sdf/core/grouping.hpp"
#include "sdf/core/kernel.hpp"
#include "sdf/core/step_cdf.hpp"
#include "sdf/core/step_density.hpp"
#include "sdf/core/types.hpp"

namespace sdf {
namespace detail {

inline void check_counts(const Counts& counts, Count n, bool require_total) {
  if (counts.size() < 1) throw ArgumentError("counts: need at least one cell");
  if (n < 1) throw ArgumentError("counts: sample size n must be positive");
  Count total = 0;
  for (Index i = 0; i < counts.size(); ++i) {
    if (counts(i) < 0) throw ArgumentError("counts: entry " + std::to_string(i + 1) + " is negative");
    total += counts(i);
  }
  if (require_total && total != n) {
    throw ArgumentError("counts: entries sum to " + std::to_string(total) + " but n = " +
                        std::to_string(n));
  }
}

// M * numer / denom. Every estimator height goes through this one expression
// so that routes which coincide algebraically also coincide bit for bit.
template <typename Scalar>
Scalar scaled_height(Index cells, Scalar numer, Scalar denom) {
  return (Scalar(cells) * numer) / denom;
}

template <typename Scalar>
BasicStepDensity<Scalar> scaled_count_density(const Counts& counts, Count n) {
  const Index cells = counts.size();
  Vector<Scalar> heights(cells);
  for (Index i = 0; i < cells; ++i) {
    heights(i) = scaled_height<Scalar>(cells, Scalar(counts(i)), Scalar(n) * Scalar(1));
  }
  return BasicStepDensity<Scalar>(GroupingScheme::unit(cells), std::move(heights));
}

}  // namespace detail

/// Parent-density estimate of the natural estimator: height (M/n) X_i on
/// cell i.
template <typename Scalar = double>
BasicStepDensity<Scalar> natural_parent_estimate(const Counts& counts, Count n) {
  detail::check_counts(counts, n, true);
  return detail::scaled_count_density<Scalar>(counts, n);
}

/// Empirical distribution function of (M/n) X_i.
template <typename Scalar = double>
BasicStepCdf<Scalar> natural_estimator(const Counts& counts, Count n) {
  return sdf_of_density(natural_parent_estimate<Scalar>(counts, n));
}

/// Same formula as natural_estimator applied to Poissonized counts, whose
/// total N differs from the denominator n.
template <typename Scalar = double>
BasicStepCdf<Scalar> poissonized_estimator(const Counts& counts, Count n) {
  detail::check_counts(counts, n, false);
  return sdf_of_density(detail::scaled_count_density<Scalar>(counts, n));
}

/// Histogram of grouped frequencies: height M Xbar_j / (n (k_j - k_{j-1}))
/// on (k_{j-1}/M, k_j/M].
template <typename Scalar = double>
BasicStepDensity<Scalar> grouped_parent_estimate(const Counts& counts, Count n,
                                                 const GroupingScheme& scheme) {
  detail::check_counts(counts, n, true);
  if (scheme.cells() != counts.size()) {
    throw ArgumentError("grouped estimator: breaks end at " + std::to_string(scheme.cells()) +
                        " but there are " + std::to_string(counts.size()) + " cells");
  }
  const Index cells = counts.size();
  Vector<Scalar> heights(scheme.groups());
  for (Index j = 0; j < scheme.groups(); ++j) {
    const Count group_total = counts.segment(scheme.begin(j), scheme.width(j)).sum();
    heights(j) = detail::scaled_height<Scalar>(cells, Scalar(group_total),
                                               Scalar(n) * Scalar(scheme.width(j)));
  }
  return BasicStepDensity<Scalar>(scheme, std::move(heights));
}

template <typename Scalar = double>
BasicStepCdf<Scalar> grouped_estimator(const Counts& counts, Count n, const GroupingScheme& scheme) {
  return sdf_of_density(grouped_parent_estimate<Scalar>(counts, n, scheme));
}

/// Discrete kernel smoothing of the counts:
/// height (M / (n k)) sum_i w((j - i)/k) X_i on cell j. The sum runs over
/// cells 1..M only; nothing is reflected or renormalized at the edges, so
/// cells within one bandwidth of the boundary lose mass.
template <typename Scalar = double>
BasicStepDensity<Scalar> kernel_parent_estimate(const Counts& counts, Count n,
                                                const KernelSpec& spec) {
  detail::check_counts(counts, n, true);
  const Index cells = counts.size();
  const auto taps = kernel_taps<Scalar>(spec);
  const Scalar denom = Scalar(n) * Scalar(spec.bandwidth());
  Vector<Scalar> heights(cells);
  for (Index j = 0; j < cells; ++j) {
    Scalar acc = Scalar(0);
    for (const auto& tap : taps) {
      const Index i = j - static_cast<Index>(tap.offset);
      if (i < 0 || i >= cells) continue;
      acc += tap.weight * Scalar(counts(i));
    }
    heights(j) = detail::scaled_height<Scalar>(cells, acc, denom);
  }
  return BasicStepDensity<Scalar>(GroupingScheme::unit(cells), std::move(heights));
}

template <typename Scalar = double>
BasicStepCdf<Scalar> kernel_estimator(const Counts& counts, Count n, const KernelSpec& spec) {
  return sdf_of_density(kernel_parent_estimate<Scalar>(counts, n, spec));
}

}  // namespace sdf
