#pragma once

#include "sdf/core/cell_probabilities.hpp"
#include "sdf/core/estimators.hpp"
#include "sdf/core/grouping.hpp"
#include "sdf/core/kernel.hpp"
#include "sdf/core/step_cdf.hpp"
#include "sdf/core/step_density.hpp"

namespace sdf {

/// g_M: height M p_i on ((i-1)/M, i/M].
template <typename Scalar>
BasicStepDensity<Scalar> parent_density(const CellProbabilities<Scalar>& p) {
  Vector<Scalar> heights(p.cells());
  for (Index i = 0; i < p.cells(); ++i) heights(i) = p.scaled(i);
  return BasicStepDensity<Scalar>(GroupingScheme::unit(p.cells()), std::move(heights));
}

/// F_M, the empirical distribution function of M p_i.
template <typename Scalar>
BasicStepCdf<Scalar> structural_df(const CellProbabilities<Scalar>& p) {
  return sdf_of_density(parent_density(p));
}

/// Noise-free grouped parent density: height M q_j / (k_j - k_{j-1}) with
/// q_j the exact group probability.
template <typename Scalar>
BasicStepDensity<Scalar> grouped_population_density(const CellProbabilities<Scalar>& p,
                                                    const GroupingScheme& scheme) {
  if (scheme.cells() != p.cells()) {
    throw ArgumentError("grouped population: breaks do not end at M");
  }
  Vector<Scalar> heights(scheme.groups());
  for (Index j = 0; j < scheme.groups(); ++j) {
    const Scalar q = detail::compensated_sum(p.probs().segment(scheme.begin(j), scheme.width(j)));
    heights(j) = detail::scaled_height<Scalar>(p.cells(), q, Scalar(scheme.width(j)));
  }
  return BasicStepDensity<Scalar>(scheme, std::move(heights));
}

template <typename Scalar>
BasicStepCdf<Scalar> grouped_population_sdf(const CellProbabilities<Scalar>& p,
                                            const GroupingScheme& scheme) {
  return sdf_of_density(grouped_population_density(p, scheme));
}

/// Kernel-smoothed parent density of the true probabilities:
/// height (1/k) sum_i w((j - i)/k) M p_i on cell j.
template <typename Scalar>
BasicStepDensity<Scalar> kernel_population_density(const CellProbabilities<Scalar>& p,
                                                   const KernelSpec& spec) {
  const Index cells = p.cells();
  const auto taps = kernel_taps<Scalar>(spec);
  Vector<Scalar> heights(cells);
  for (Index j = 0; j < cells; ++j) {
    Scalar acc = Scalar(0);
    for (const auto& tap : taps) {
      const Index i = j - static_cast<Index>(tap.offset);
      if (i < 0 || i >= cells) continue;
      acc += tap.weight * p[i];
    }
    heights(j) = detail::scaled_height<Scalar>(cells, acc, Scalar(spec.bandwidth()));
  }
  return BasicStepDensity<Scalar>(GroupingScheme::unit(cells), std::move(heights));
}

template <typename Scalar>
BasicStepCdf<Scalar> kernel_population_sdf(const CellProbabilities<Scalar>& p,
                                           const KernelSpec& spec) {
  return sdf_of_density(kernel_population_density(p, spec));
}

}  // namespace sdf
