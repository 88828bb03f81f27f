#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>

#include "sdf/core/step_cdf.hpp"
#include "sdf/core/types.hpp"

namespace sdf {
namespace detail {

// Walks the merged knot set of two step CDFs in increasing order, calling
// visit(t, level_a, level_b) with both right-continuous values at each
// merged knot t.
template <typename Scalar, typename Visit>
void walk_merged(const BasicStepCdf<Scalar>& a, const BasicStepCdf<Scalar>& b, Visit&& visit) {
  const auto& ka = a.knots();
  const auto& kb = b.knots();
  Index ia = 0;
  Index ib = 0;
  Scalar la = Scalar(0);
  Scalar lb = Scalar(0);
  while (ia < ka.size() || ib < kb.size()) {
    Scalar t;
    if (ia == ka.size()) {
      t = kb(ib);
    } else if (ib == kb.size()) {
      t = ka(ia);
    } else {
      t = std::min(ka(ia), kb(ib));
    }
    if (ia < ka.size() && ka(ia) == t) la = a.levels()(ia++);
    if (ib < kb.size() && kb(ib) == t) lb = b.levels()(ib++);
    visit(t, la, lb);
  }
}

}  // namespace detail

/// Exact integral of |a - b| over the real line.
template <typename Scalar>
Scalar l1_distance(const BasicStepCdf<Scalar>& a, const BasicStepCdf<Scalar>& b) {
  Scalar total = Scalar(0);
  bool started = false;
  Scalar prev_t = Scalar(0);
  Scalar prev_gap = Scalar(0);
  detail::walk_merged(a, b, [&](Scalar t, Scalar la, Scalar lb) {
    if (started) total += prev_gap * (t - prev_t);
    started = true;
    prev_t = t;
    prev_gap = la > lb ? la - lb : lb - la;
  });
  return total;
}

/// sup_x |a(x) - b(x)|. Both one-sided limits at a knot are values taken on
/// neighbouring merged intervals, so checking right values suffices.
template <typename Scalar>
Scalar sup_distance(const BasicStepCdf<Scalar>& a, const BasicStepCdf<Scalar>& b) {
  Scalar best = Scalar(0);
  detail::walk_merged(a, b, [&](Scalar, Scalar la, Scalar lb) {
    best = std::max(best, la > lb ? la - lb : lb - la);
  });
  return best;
}

/// A continuous distribution function with compact support [lower, upper]
/// that knows its quantile function and the running integral
/// cdf_integral(x) = integral of cdf over [lower, x].
template <typename R>
concept ContinuousReference = requires(const R& r, double x) {
  { r.cdf(x) } -> std::convertible_to<double>;
  { r.quantile(x) } -> std::convertible_to<double>;
  { r.cdf_integral(x) } -> std::convertible_to<double>;
  { r.lower() } -> std::convertible_to<double>;
  { r.upper() } -> std::convertible_to<double>;
};

namespace detail {

template <ContinuousReference R>
double clamped_cdf_integral(const R& ref, double x) {
  if (x <= ref.lower()) return 0.0;
  if (x >= ref.upper()) return ref.cdf_integral(ref.upper()) + (x - ref.upper());
  return ref.cdf_integral(x);
}

// Integral of |c - F| over [a, b].
template <ContinuousReference R>
double constant_gap_integral(const R& ref, double c, double a, double b) {
  double cross = c <= 0.0 ? ref.lower() : (c >= 1.0 ? ref.upper() : ref.quantile(c));
  cross = std::clamp(cross, a, b);
  const double ia = clamped_cdf_integral(ref, a);
  const double ix = clamped_cdf_integral(ref, cross);
  const double ib = clamped_cdf_integral(ref, b);
  return (c * (cross - a) - (ix - ia)) + ((ib - ix) - c * (b - cross));
}

}  // namespace detail

/// Exact integral of |step - F| for a continuous reference F.
template <ContinuousReference R>
double l1_distance(const StepCdf& step, const R& ref) {
  const auto& k = step.knots();
  const double lo = std::min(ref.lower(), k(0));
  const double hi = std::max(ref.upper(), k(k.size() - 1));
  double total = detail::constant_gap_integral(ref, 0.0, lo, k(0));
  for (Index i = 0; i < k.size(); ++i) {
    const double right = i + 1 < k.size() ? k(i + 1) : hi;
    total += detail::constant_gap_integral(ref, step.levels()(i), k(i), right);
  }
  return total;
}

/// sup_x |step(x) - F(x)| for a continuous reference F.
template <ContinuousReference R>
double sup_distance(const StepCdf& step, const R& ref) {
  const auto& k = step.knots();
  double best = ref.cdf(k(0));
  for (Index i = 0; i < k.size(); ++i) {
    const double c = step.levels()(i);
    best = std::max(best, std::abs(c - ref.cdf(k(i))));
    const double right = i + 1 < k.size() ? ref.cdf(k(i + 1)) : 1.0;
    best = std::max(best, std::abs(c - right));
  }
  return best;
}

}  // namespace sdf
