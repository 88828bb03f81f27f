#include "sdf/sampling/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "sdf/core/distances.hpp"
#include "sdf/core/errors.hpp"
#include "sdf/core/estimators.hpp"
#include "sdf/sampling/variates.hpp"

namespace sdf::sampling {

bool CountsPair::sign_consistent() const {
  bool any_pos = false;
  bool any_neg = false;
  for (Index i = 0; i < x.size(); ++i) {
    any_pos = any_pos || x(i) > y(i);
    any_neg = any_neg || x(i) < y(i);
  }
  return !(any_pos && any_neg);
}

bool CountsPair::total_gap_matches() const {
  return (x - y).cwiseAbs().sum() == std::abs(capital_n - n);
}

CountsPair sample_coupled(const CellProbabilities<double>& p, Count n, SeededRng& rng) {
  if (n < 1) throw ArgumentError("sample_coupled: n must be positive");
  CountsPair pair;
  pair.n = n;
  pair.capital_n = sample_poisson(static_cast<double>(n), rng);
  const Counts base = sample_multinomial(p, std::min(n, pair.capital_n), rng);
  const Counts extra = sample_multinomial(p, std::abs(pair.capital_n - n), rng);
  if (pair.capital_n <= n) {
    pair.y = base;
    pair.x = base + extra;
  } else {
    pair.x = base;
    pair.y = base + extra;
  }
  return pair;
}

bool CouplingCheck::holds() const {
  const bool integer_chain = max_count_gap <= mismatched_cells && mismatched_cells <= total_gap &&
                             l1_count_sum <= total_gap;
  return sign_consistent && total_gap_matches && integer_chain;
}

CouplingCheck coupling_l1_bound(const CountsPair& pair) {
  const Index cells = pair.x.size();
  if (cells < 1 || pair.y.size() != cells) {
    throw ArgumentError("coupling_l1_bound: x and y must be non-empty and of equal length");
  }
  CouplingCheck out;
  out.total_gap = std::abs(pair.capital_n - pair.n);
  out.bound = static_cast<double>(out.total_gap) / static_cast<double>(cells);
  out.sign_consistent = pair.sign_consistent();
  out.total_gap_matches = pair.total_gap_matches();
  out.mismatched_cells = (pair.x.array() != pair.y.array()).count();

  // F^(x) and F~(x) only change at (M/n) t for integer t, so both distances
  // reduce to the cumulative count histograms #{x_i <= t} and #{y_i <= t}.
  const Count top = std::max(pair.x.maxCoeff(), pair.y.maxCoeff());
  std::vector<Count> hx(static_cast<std::size_t>(top + 1), 0);
  std::vector<Count> hy(static_cast<std::size_t>(top + 1), 0);
  for (Index i = 0; i < cells; ++i) {
    ++hx[static_cast<std::size_t>(pair.x(i))];
    ++hy[static_cast<std::size_t>(pair.y(i))];
  }
  Count cx = 0;
  Count cy = 0;
  for (std::size_t t = 0; t < hx.size(); ++t) {
    cx += hx[t];
    cy += hy[t];
    const Count gap = std::abs(cx - cy);
    out.max_count_gap = std::max(out.max_count_gap, gap);
    out.l1_count_sum += gap;
  }

  const StepCdf natural = natural_estimator(pair.x, pair.n);
  const StepCdf poissonized = poissonized_estimator(pair.y, pair.n);
  out.sup_distance = sup_distance(natural, poissonized);
  out.l1_distance = l1_distance(natural, poissonized);
  return out;
}

}  // namespace sdf::sampling
