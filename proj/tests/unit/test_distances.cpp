#include <cmath>

#include "doctest.h"
#include "sdf/core.hpp"
#include "support.hpp"

using namespace sdf;

namespace {

StepCdf two_point() {
  Vector<double> k(2), l(2);
  k << 0.0, 2.0;
  l << 0.5, 1.0;
  return StepCdf(k, l);
}

/// Brute-force L1 on a fine midpoint grid, as an independent oracle.
double l1_grid(const StepCdf& a, const StepCdf& b, double lo, double hi, int steps) {
  const double h = (hi - lo) / steps;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double x = lo + (i + 0.5) * h;
    acc += std::abs(a(x) - b(x)) * h;
  }
  return acc;
}

struct Uniform01 {
  double cdf(double x) const { return x <= 0 ? 0.0 : (x >= 1 ? 1.0 : x); }
  double quantile(double y) const { return y; }
  double cdf_integral(double x) const { return x <= 0 ? 0.0 : (x >= 1 ? x - 0.5 : 0.5 * x * x); }
  double lower() const { return 0.0; }
  double upper() const { return 1.0; }
};

}  // namespace

TEST_CASE("l1 and sup examples") {
  const auto one = StepCdf::point_mass(1.0);
  const auto three = StepCdf::point_mass(3.0);
  CHECK(l1_distance(one, three) == 2.0);
  CHECK(sup_distance(one, three) == 1.0);
  CHECK(l1_distance(one, one) == 0.0);
  CHECK(sup_distance(one, one) == 0.0);
  CHECK(l1_distance(two_point(), one) == 1.0);
  CHECK(sup_distance(two_point(), one) == 0.5);
}

TEST_CASE("indicator L1 identity") {
  sampling::SeededRng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const double a = 20.0 * rng.uniform() - 10.0;
    const double b = 20.0 * rng.uniform() - 10.0;
    CHECK(std::abs(l1_distance(StepCdf::point_mass(a), StepCdf::point_mass(b)) - std::abs(b - a)) <
          1e-12);
  }
}

TEST_CASE("l1 distance is a metric and matches a grid oracle") {
  sampling::SeededRng rng(42);
  for (int t = 0; t < 200; ++t) {
    const auto a = structural_df(test::random_probs(test::random_index(1, 20, rng), rng));
    const auto b = structural_df(test::random_probs(test::random_index(1, 20, rng), rng));
    const auto c = structural_df(test::random_probs(test::random_index(1, 20, rng), rng));
    const double ab = l1_distance(a, b);
    CHECK(ab == l1_distance(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= l1_distance(a, c) + l1_distance(c, b) + 1e-12);
    CHECK(sup_distance(a, b) == sup_distance(b, a));
    CHECK(sup_distance(a, b) <= 1.0);
    if (t < 20) {
      const double hi = std::max(a.knots().maxCoeff(), b.knots().maxCoeff()) + 1.0;
      CHECK(ab == doctest::Approx(l1_grid(a, b, -1.0, hi, 400000)).epsilon(1e-4));
    }
  }
}

TEST_CASE("distances to a continuous reference") {
  const Uniform01 u;
  // point mass at 1/2 vs uniform: 2 * integral of x over [0, 1/2]
  CHECK(l1_distance(StepCdf::point_mass(0.5), u) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sup_distance(StepCdf::point_mass(0.5), u) == doctest::Approx(0.5).epsilon(1e-14));
  // point mass at 2: integral of x on [0,1] plus 1 on [1,2]
  CHECK(l1_distance(StepCdf::point_mass(2.0), u) == doctest::Approx(1.5).epsilon(1e-14));
  // L1 between two distributions equals the integral of |quantile difference|
  CHECK(l1_distance(StepCdf::point_mass(-1.0), u) == doctest::Approx(1.5).epsilon(1e-14));
  Vector<double> k(4), l(4);
  k << 0.125, 0.375, 0.625, 0.875;
  l << 0.25, 0.5, 0.75, 1.0;
  CHECK(l1_distance(StepCdf(k, l), u) == doctest::Approx(4 * 2 * 0.5 * 0.125 * 0.125).epsilon(1e-13));
  CHECK(sup_distance(StepCdf(k, l), u) == doctest::Approx(0.125).epsilon(1e-13));
}
