#pragma once

#include "sdf/core/cell_probabilities.hpp"
#include "sdf/core/types.hpp"
#include "sdf/sampling/seeded_rng.hpp"

namespace sdf::sampling {

/// Multinomial counts x (total n) coupled with Poissonized counts y (total
/// N ~ Poisson(n)) so that one vector dominates the other coordinatewise.
struct CountsPair {
  Counts x;
  Counts y;
  Count n = 0;
  Count capital_n = 0;

  /// x_i - y_i has one sign across all cells.
  bool sign_consistent() const;
  /// sum |x_i - y_i| == |N - n|.
  bool total_gap_matches() const;
};

/// Draws N ~ Poisson(n), a shared base B ~ mult(min(n, N), p) and an
/// increment E ~ mult(|N - n|, p); the smaller of x, y is B and the larger
/// is B + E.
CountsPair sample_coupled(const CellProbabilities<double>& p, Count n, SeededRng& rng);

/// Exact comparison of the natural estimator on x with its Poissonized
/// analogue on y (same denominator n).
///
/// Integer fields carry the exact chains
///   max_count_gap <= mismatched_cells <= total_gap   (sup distance times M)
///   l1_count_sum  <= total_gap                       (L1 distance times n)
/// and the floating fields are the same distances computed from the step
/// CDFs.
struct CouplingCheck {
  Count total_gap = 0;         // |N - n|
  Count mismatched_cells = 0;  // #{i : x_i != y_i}
  Count max_count_gap = 0;     // M sup |F^ - F~|
  Count l1_count_sum = 0;      // n integral |F^ - F~|
  double bound = 0.0;          // |N - n| / M
  double sup_distance = 0.0;
  double l1_distance = 0.0;
  bool sign_consistent = false;
  bool total_gap_matches = false;

  bool holds() const;
};

CouplingCheck coupling_l1_bound(const CountsPair& pair);

}  // namespace sdf::sampling
