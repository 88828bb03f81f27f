#pragma once

#include <cstdint>

#include "sdf/core.hpp"
#include "sdf/sampling.hpp"

namespace sdf::test {

/// Random probability vector with M cells; some cells are forced to zero.
inline CellProbabilities<double> random_probs(Index cells, sampling::SeededRng& rng) {
  Vector<double> w(cells);
  for (Index i = 0; i < cells; ++i) {
    const double u = rng.uniform();
    w(i) = u < 0.1 ? 0.0 : -std::log(1.0 - rng.uniform());
  }
  if (w.sum() == 0.0) w(0) = 1.0;
  return CellProbabilities<double>(w / w.sum());
}

inline Index random_index(Index lo, Index hi, sampling::SeededRng& rng) {
  return lo + static_cast<Index>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Counts of n items thrown into M cells uniformly at random.
inline Counts random_counts(Index cells, Count n, sampling::SeededRng& rng) {
  Counts c = Counts::Zero(cells);
  for (Count t = 0; t < n; ++t) ++c(random_index(0, cells - 1, rng));
  return c;
}

}  // namespace sdf::test
