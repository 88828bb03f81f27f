#pragma once

#include <string>
#include <utility>

#include "sdf/core/errors.hpp"
#include "sdf/core/types.hpp"

namespace sdf {

/// Cell groups given by integer breaks 0 = k_0 < k_1 < ... < k_m = M.
/// Group j (1-based) holds cells k_{j-1}+1 .. k_j.
///
/// The same breaks describe the support grid of every step density in this
/// library, so a density's breakpoints are always multiples of 1/M.
class GroupingScheme {
 public:
  explicit GroupingScheme(Counts breaks) : breaks_(std::move(breaks)) {
    if (breaks_.size() < 2) throw ArgumentError("grouping: need at least one group");
    if (breaks_(0) != 0) throw ArgumentError("grouping: first break must be 0");
    for (Index j = 1; j < breaks_.size(); ++j) {
      if (breaks_(j) <= breaks_(j - 1)) {
        throw ArgumentError("grouping: breaks must be strictly increasing (position " +
                            std::to_string(j) + ")");
      }
    }
  }

  /// Every cell its own group.
  static GroupingScheme unit(Index cells) {
    if (cells < 1) throw ArgumentError("grouping: M must be positive");
    return GroupingScheme(Counts::LinSpaced(cells + 1, 0, cells));
  }

  /// One group covering all cells.
  static GroupingScheme single(Index cells) {
    if (cells < 1) throw ArgumentError("grouping: M must be positive");
    Counts b(2);
    b << 0, cells;
    return GroupingScheme(std::move(b));
  }

  /// Groups of `size` consecutive cells; when size does not divide M the
  /// final group holds the remaining M mod size cells.
  static GroupingScheme equal_size(Index cells, Index size) {
    if (cells < 1) throw ArgumentError("grouping: M must be positive");
    if (size < 1 || size > cells) {
      throw ArgumentError("grouping: group size must lie in [1, M]");
    }
    const Index groups = (cells + size - 1) / size;
    Counts b(groups + 1);
    for (Index j = 0; j < groups; ++j) b(j) = j * size;
    b(groups) = cells;
    return GroupingScheme(std::move(b));
  }

  Index groups() const { return breaks_.size() - 1; }
  Index cells() const { return breaks_(breaks_.size() - 1); }
  const Counts& breaks() const { return breaks_; }

  /// First cell (0-based) of group j (0-based) and its width.
  Index begin(Index j) const { return breaks_(j); }
  Index end(Index j) const { return breaks_(j + 1); }
  Count width(Index j) const { return breaks_(j + 1) - breaks_(j); }

  bool operator==(const GroupingScheme& other) const {
    return breaks_.size() == other.breaks_.size() && breaks_ == other.breaks_;
  }

 private:
  Counts breaks_;
};

}  // namespace sdf
