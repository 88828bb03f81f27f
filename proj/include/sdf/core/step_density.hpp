#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "sdf/core/errors.hpp"
#include "sdf/core/grouping.hpp"
#include "sdf/core/step_cdf.hpp"
#include "sdf/core/types.hpp"

namespace sdf {

/// Piecewise-constant density on (0, 1].
///
/// Breakpoints are restricted to the grid {0, 1/M, ..., 1}; they are held as
/// integer grid indices (a GroupingScheme) so that interval widths are exact
/// multiples of 1/M. heights(j) is the value on (b_j/M, b_{j+1}/M].
template <typename Scalar = double>
class BasicStepDensity {
 public:
  BasicStepDensity(GroupingScheme grid, Vector<Scalar> heights)
      : grid_(std::move(grid)), heights_(std::move(heights)) {
    if (heights_.size() != grid_.groups()) {
      throw ArgumentError("step density: need one height per interval");
    }
    for (Index j = 0; j < heights_.size(); ++j) {
      if (!(heights_(j) >= Scalar(0))) {
        throw ArgumentError("step density: height " + std::to_string(j) + " is negative or NaN");
      }
    }
  }

  /// Grid resolution M.
  Index cells() const { return grid_.cells(); }
  Index intervals() const { return grid_.groups(); }
  const GroupingScheme& grid() const { return grid_; }
  const Vector<Scalar>& heights() const { return heights_; }

  Vector<Scalar> breakpoints() const {
    return grid_.breaks().template cast<Scalar>() / Scalar(cells());
  }

  Scalar operator()(Scalar u) const {
    if (!(u > Scalar(0)) || u > Scalar(1)) return Scalar(0);
    // Cell index ceil(M u) in 1..M, then the interval whose breaks bracket it.
    Index cell = static_cast<Index>(std::ceil(static_cast<double>(u * Scalar(cells()))));
    cell = std::clamp<Index>(cell, 1, cells());
    const Count* b = grid_.breaks().data();
    const auto pos = std::lower_bound(b, b + grid_.breaks().size(), Count(cell)) - b;
    return heights_(pos - 1);
  }

  /// Sum of height times interval width.
  Scalar integral() const {
    detail::CompensatedSum<Scalar> acc;
    for (Index j = 0; j < heights_.size(); ++j) acc.add(heights_(j) * Scalar(grid_.width(j)));
    return acc.value() / Scalar(cells());
  }

 private:
  GroupingScheme grid_;
  Vector<Scalar> heights_;
};

using StepDensity = BasicStepDensity<double>;

/// Distribution function of d(U) for U uniform on (0, 1]: each height is an
/// atom whose mass is its interval width.
template <typename Scalar>
BasicStepCdf<Scalar> sdf_of_density(const BasicStepDensity<Scalar>& d) {
  Counts widths(d.intervals());
  for (Index j = 0; j < d.intervals(); ++j) widths(j) = d.grid().width(j);
  return BasicStepCdf<Scalar>::from_weighted_atoms(d.heights(), widths);
}

}  // namespace sdf
