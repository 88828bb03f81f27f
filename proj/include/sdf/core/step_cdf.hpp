#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sdf/core/errors.hpp"
#include "sdf/core/types.hpp"

namespace sdf {

/// Right-continuous step distribution function.
///
/// Knots are the sorted, distinct jump locations; levels(i) is the value of
/// the function on [knots(i), knots(i+1)). The function is 0 left of the
/// first knot and the last level is exactly 1.
template <typename Scalar = double>
class BasicStepCdf {
 public:
  /// Builds from explicit knots and levels. Repeated knots collapse onto the
  /// last level given for them; knots that add no mass are dropped.
  BasicStepCdf(const Vector<Scalar>& knots, const Vector<Scalar>& levels) {
    if (knots.size() != levels.size() || knots.size() < 1) {
      throw ArgumentError("step cdf: knots and levels must be non-empty and of equal length");
    }
    std::vector<Scalar> k;
    std::vector<Scalar> l;
    Scalar prev_level = Scalar(0);
    for (Index i = 0; i < knots.size(); ++i) {
      if (!std::isfinite(static_cast<double>(knots(i)))) {
        throw ArgumentError("step cdf: knot " + std::to_string(i) + " is not finite");
      }
      if (i > 0 && knots(i) < knots(i - 1)) {
        throw ArgumentError("step cdf: knots must be nondecreasing");
      }
      if (!(levels(i) >= prev_level) || levels(i) > Scalar(1)) {
        throw ArgumentError("step cdf: levels must be nondecreasing within [0, 1]");
      }
      if (!k.empty() && knots(i) == k.back()) {
        l.back() = levels(i);
      } else if (levels(i) > prev_level) {
        k.push_back(knots(i));
        l.push_back(levels(i));
      }
      prev_level = levels(i);
    }
    if (l.empty() || l.back() != Scalar(1)) {
      throw ArgumentError("step cdf: final level must be exactly 1");
    }
    knots_ = Eigen::Map<const Vector<Scalar>>(k.data(), static_cast<Index>(k.size()));
    levels_ = Eigen::Map<const Vector<Scalar>>(l.data(), static_cast<Index>(l.size()));
  }

  static BasicStepCdf point_mass(Scalar at) {
    return BasicStepCdf(Vector<Scalar>::Constant(1, at), Vector<Scalar>::Constant(1, Scalar(1)));
  }

  /// Distribution putting mass weights(i) / sum(weights) on values(i).
  ///
  /// Levels are (cumulative integer weight) / (total weight), so two routes
  /// that produce the same values and weights yield bit-identical results.
  static BasicStepCdf from_weighted_atoms(const Vector<Scalar>& values, const Counts& weights) {
    if (values.size() != weights.size() || values.size() < 1) {
      throw ArgumentError("step cdf: values and weights must be non-empty and of equal length");
    }
    Count total = 0;
    for (Index i = 0; i < weights.size(); ++i) {
      if (weights(i) < 0) throw ArgumentError("step cdf: negative atom weight");
      if (std::isnan(static_cast<double>(values(i)))) {
        throw ArgumentError("step cdf: atom value is NaN");
      }
      total += weights(i);
    }
    if (total == 0) throw ArgumentError("step cdf: atoms carry no weight");

    std::vector<Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return values(a) < values(b); });

    std::vector<Scalar> k;
    std::vector<Count> cumulative;
    Count running = 0;
    for (Index idx : order) {
      if (weights(idx) == 0) continue;
      running += weights(idx);
      if (!k.empty() && values(idx) == k.back()) {
        cumulative.back() = running;
      } else {
        k.push_back(values(idx));
        cumulative.push_back(running);
      }
    }
    BasicStepCdf out;
    out.knots_ = Eigen::Map<const Vector<Scalar>>(k.data(), static_cast<Index>(k.size()));
    out.levels_.resize(out.knots_.size());
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
      out.levels_(static_cast<Index>(i)) = Scalar(cumulative[i]) / Scalar(total);
    }
    return out;
  }

  /// Distribution with real masses, normalized by their total. The last
  /// level is pinned to 1.
  static BasicStepCdf from_masses(const Vector<Scalar>& values, const Vector<Scalar>& masses) {
    if (values.size() != masses.size() || values.size() < 1) {
      throw ArgumentError("step cdf: values and masses must be non-empty and of equal length");
    }
    for (Index i = 0; i < masses.size(); ++i) {
      if (!(masses(i) >= Scalar(0)) || std::isnan(static_cast<double>(values(i)))) {
        throw ArgumentError("step cdf: masses must be nonnegative and values not NaN");
      }
    }
    const Scalar total = detail::compensated_sum(masses);
    if (!(total > Scalar(0))) throw ArgumentError("step cdf: atoms carry no mass");

    std::vector<Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return values(a) < values(b); });
    std::vector<Scalar> k;
    std::vector<Scalar> l;
    detail::CompensatedSum<Scalar> running;
    for (Index idx : order) {
      if (masses(idx) == Scalar(0)) continue;
      running.add(masses(idx));
      const Scalar level = std::min(Scalar(1), running.value() / total);
      if (!k.empty() && values(idx) == k.back()) {
        l.back() = level;
      } else if (l.empty() || level > l.back()) {
        k.push_back(values(idx));
        l.push_back(level);
      }
    }
    l.back() = Scalar(1);
    BasicStepCdf out;
    out.knots_ = Eigen::Map<const Vector<Scalar>>(k.data(), static_cast<Index>(k.size()));
    out.levels_ = Eigen::Map<const Vector<Scalar>>(l.data(), static_cast<Index>(l.size()));
    return out;
  }

  /// Empirical distribution function of `values`, each with mass 1/size.
  static BasicStepCdf empirical(const Vector<Scalar>& values) {
    return from_weighted_atoms(values, Counts::Ones(values.size()));
  }

  /// F(x): level of the largest knot <= x, 0 before the first knot.
  Scalar operator()(Scalar x) const {
    const Scalar* begin = knots_.data();
    const Scalar* end = begin + knots_.size();
    const auto pos = std::upper_bound(begin, end, x) - begin;
    return pos == 0 ? Scalar(0) : levels_(pos - 1);
  }

  /// F(x-): level of the largest knot < x.
  Scalar left_limit(Scalar x) const {
    const Scalar* begin = knots_.data();
    const Scalar* end = begin + knots_.size();
    const auto pos = std::lower_bound(begin, end, x) - begin;
    return pos == 0 ? Scalar(0) : levels_(pos - 1);
  }

  Index size() const { return knots_.size(); }
  const Vector<Scalar>& knots() const { return knots_; }
  const Vector<Scalar>& levels() const { return levels_; }

  /// Jump size at knot i.
  Scalar mass(Index i) const { return i == 0 ? levels_(0) : levels_(i) - levels_(i - 1); }

  bool operator==(const BasicStepCdf& other) const {
    return knots_.size() == other.knots_.size() && knots_ == other.knots_ &&
           levels_ == other.levels_;
  }

 private:
  BasicStepCdf() = default;

  Vector<Scalar> knots_;
  Vector<Scalar> levels_;
};

using StepCdf = BasicStepCdf<double>;

}  // namespace sdf
