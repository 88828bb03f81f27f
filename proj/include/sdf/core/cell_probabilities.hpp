#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>

#include "sdf/core/errors.hpp"
#include "sdf/core/types.hpp"

namespace sdf {

/// Multinomial cell probabilities p_M = (p_1, ..., p_M).
///
/// Entries are nonnegative and sum to one. Construction repairs floating
/// drift of at most `kRenormalizeTolerance` by rescaling and rejects
/// anything larger.
template <typename Scalar = double>
class CellProbabilities {
 public:
  static constexpr double kRenormalizeTolerance = 1e-9;

  explicit CellProbabilities(Vector<Scalar> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 1) throw ArgumentError("cell probabilities: need at least one cell");
    for (Index i = 0; i < probs_.size(); ++i) {
      if (!std::isfinite(static_cast<double>(probs_(i))) || probs_(i) < Scalar(0)) {
        throw ModelError("cell probabilities: entry " + std::to_string(i + 1) +
                         " is negative or not finite");
      }
    }
    // Summing in sorted order makes the total, and hence the normalized
    // vector, independent of the cell order.
    Vector<Scalar> sorted = probs_;
    std::sort(sorted.data(), sorted.data() + sorted.size());
    const Scalar total = detail::compensated_sum(sorted);
    if (std::abs(static_cast<double>(total) - 1.0) > kRenormalizeTolerance) {
      std::ostringstream msg;
      msg << std::setprecision(17) << "cell probabilities: entries sum to "
          << static_cast<double>(total) << ", not 1";
      throw ModelError(msg.str());
    }
    if (total != Scalar(1)) probs_ /= total;
  }

  Index cells() const { return probs_.size(); }
  const Vector<Scalar>& probs() const { return probs_; }
  Scalar operator[](Index i) const { return probs_(i); }

  /// M * p_i, the value whose empirical distribution is the structural
  /// distribution function.
  Scalar scaled(Index i) const { return Scalar(cells()) * probs_(i); }

  static CellProbabilities uniform(Index cells) {
    if (cells < 1) throw ArgumentError("cell probabilities: need at least one cell");
    return CellProbabilities(Vector<Scalar>::Constant(cells, Scalar(1) / Scalar(cells)));
  }

 private:
  Vector<Scalar> probs_;
};

/// p_i = G(i/M) - G((i-1)/M) for a distribution function G on [0, 1].
template <typename Scalar = double, typename Cdf>
CellProbabilities<Scalar> make_cell_probs_from_cdf(Cdf&& cdf, Index cells) {
  if (cells < 1) throw ArgumentError("make_cell_probs_from_cdf: M must be positive");
  Vector<Scalar> grid(cells + 1);
  for (Index i = 0; i <= cells; ++i) {
    grid(i) = static_cast<Scalar>(cdf(Scalar(i) / Scalar(cells)));
  }
  if (std::abs(static_cast<double>(grid(0))) > CellProbabilities<Scalar>::kRenormalizeTolerance ||
      std::abs(static_cast<double>(grid(cells)) - 1.0) >
          CellProbabilities<Scalar>::kRenormalizeTolerance) {
    throw ModelError("make_cell_probs_from_cdf: G(0) must be 0 and G(1) must be 1");
  }
  for (Index i = 1; i <= cells; ++i) {
    if (!(grid(i) >= grid(i - 1))) {
      throw ModelError("make_cell_probs_from_cdf: G decreases between grid points " +
                       std::to_string(i - 1) + " and " + std::to_string(i));
    }
  }
  Vector<Scalar> probs = grid.tail(cells) - grid.head(cells);
  return CellProbabilities<Scalar>(std::move(probs));
}

}  // namespace sdf
