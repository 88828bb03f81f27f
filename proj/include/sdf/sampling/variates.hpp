#pragma once

#include "sdf/core/cell_probabilities.hpp"
#include "sdf/core/types.hpp"
#include "sdf/sampling/seeded_rng.hpp"

namespace sdf::sampling {

/// Poisson(mean) variate.
///
/// mean < 10: inversion by sequential search from 0.
/// mean >= 10: Hormann's transformed rejection with squeeze (PTRS, 1993).
Count sample_poisson(double mean, SeededRng& rng);

/// Binomial(trials, prob) variate. Works with min(prob, 1 - prob) and
/// reflects. trials * min(prob, 1 - prob) <= 30: inversion by sequential
/// search; above: Hormann's BTRS transformed rejection (1993). The result
/// always lies in [0, trials].
Count sample_binomial(Count trials, double prob, SeededRng& rng);

/// mult(n, p) by sequential conditional binomials:
/// X_i ~ Binomial(n - sum_{j<i} X_j, p_i / sum_{j>=i} p_j).
Counts sample_multinomial(const CellProbabilities<double>& p, Count n, SeededRng& rng);

/// Independent Y_i ~ Poisson(n p_i).
Counts sample_poissonized(const CellProbabilities<double>& p, Count n, SeededRng& rng);

}  // namespace sdf::sampling
