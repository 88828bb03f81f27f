#include <array>
#include <cmath>

#include "doctest.h"
#include "sdf/core.hpp"
#include "support.hpp"

using namespace sdf;

namespace {

Counts counts(std::initializer_list<Count> v) {
  Counts out(static_cast<Index>(v.size()));
  Index i = 0;
  for (Count x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST_CASE("natural estimator examples") {
  const auto f = natural_estimator(counts({2, 0}), 2);
  REQUIRE(f.size() == 2);
  CHECK(f.knots()(0) == 0.0);
  CHECK(f.knots()(1) == 2.0);
  CHECK(f.levels()(0) == 0.5);
  CHECK(natural_estimator(counts({1, 1}), 2) == StepCdf::point_mass(1.0));
  CHECK_THROWS_AS(natural_estimator(counts({1, 2}), 2), ArgumentError);
  CHECK_THROWS_AS(natural_estimator(counts({-1, 3}), 2), ArgumentError);
  CHECK_THROWS_AS(natural_estimator(counts({0, 0}), 0), ArgumentError);
}

TEST_CASE("natural estimator expectation by enumeration, M=3 n=3") {
  // All 10 outcomes of mult(3, (1/3,1/3,1/3)) with their probabilities.
  double expected = 0.0;
  double total = 0.0;
  for (Count a = 0; a <= 3; ++a) {
    for (Count b = 0; a + b <= 3; ++b) {
      const Count c = 3 - a - b;
      const double coef = 6.0 / (std::tgamma(a + 1.0) * std::tgamma(b + 1.0) * std::tgamma(c + 1.0));
      const double prob = coef / 27.0;
      total += prob;
      expected += prob * natural_estimator(counts({a, b, c}), 3)(0.5);
    }
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
  // Independent oracle: (1/M) sum_i P(X_i = 0), X_i ~ Binomial(3, 1/3).
  const double oracle = std::pow(2.0 / 3.0, 3);
  CHECK(expected == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("grouped estimator examples") {
  const auto x = counts({2, 0, 1, 1});
  CHECK(grouped_estimator(x, 4, GroupingScheme::single(4)) == StepCdf::point_mass(1.0));
  Counts br(3);
  br << 0, 2, 4;
  CHECK(grouped_estimator(x, 4, GroupingScheme(br)) == StepCdf::point_mass(1.0));
  CHECK_THROWS_AS(grouped_estimator(x, 4, GroupingScheme::unit(5)), ArgumentError);

  const auto unit = grouped_parent_estimate(x, 4, GroupingScheme::unit(4));
  for (Index i = 0; i < 4; ++i) CHECK(unit.heights()(i) == double(x(i)));
  const auto one = grouped_parent_estimate(x, 4, GroupingScheme::single(4));
  CHECK(one.heights()(0) == 1.0);
}

TEST_CASE("unit groups and k=1 box kernel reproduce the natural estimator bit-exactly") {
  sampling::SeededRng rng(21);
  for (int t = 0; t < 100; ++t) {
    const Index cells = test::random_index(1, 50, rng);
    const Count n = test::random_index(1, 200, rng);
    const auto x = test::random_counts(cells, n, rng);
    const auto nat = natural_estimator(x, n);
    CHECK(grouped_estimator(x, n, GroupingScheme::unit(cells)) == nat);
    CHECK(kernel_estimator(x, n, KernelSpec(KernelType::box, 1)) == nat);
    const auto k1 = kernel_parent_estimate(x, n, KernelSpec(KernelType::box, 1));
    CHECK(k1.heights() == natural_parent_estimate(x, n).heights());
  }
}

TEST_CASE("estimators agree with the sdf of their parent estimates") {
  sampling::SeededRng rng(22);
  for (int t = 0; t < 50; ++t) {
    const Index cells = test::random_index(2, 60, rng);
    const Count n = test::random_index(1, 300, rng);
    const auto x = test::random_counts(cells, n, rng);
    const auto scheme = GroupingScheme::equal_size(cells, test::random_index(1, cells, rng));
    const auto gp = grouped_parent_estimate(x, n, scheme);
    CHECK(sdf_of_density(gp) == grouped_estimator(x, n, scheme));
    // integral of the grouped estimate telescopes to sum(counts)/n = 1
    CHECK(std::abs(gp.integral() - 1.0) < 1e-13);
    for (auto type : {KernelType::box, KernelType::triangular, KernelType::epanechnikov}) {
      const KernelSpec spec(type, test::random_index(1, 10, rng));
      CHECK(sdf_of_density(kernel_parent_estimate(x, n, spec)) == kernel_estimator(x, n, spec));
    }
  }
}

TEST_CASE("kernel estimate from a single occupied cell") {
  // X = (n, 0, ..., 0), box kernel k = 3: taps l in {-1, 0, 1}.
  const Index cells = 8;
  const Count n = 12;
  Counts x = Counts::Zero(cells);
  x(0) = n;
  const auto d = kernel_parent_estimate(x, n, KernelSpec(KernelType::box, 3));
  CHECK(d.heights()(0) == doctest::Approx(cells / 3.0).epsilon(1e-15));
  CHECK(d.heights()(1) == doctest::Approx(cells / 3.0).epsilon(1e-15));
  for (Index j = 2; j < cells; ++j) CHECK(d.heights()(j) == 0.0);
  // the left boundary loses the l = -1 tap
  CHECK(d.integral() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("kernel Riemann sums") {
  for (Count k : {5, 10, 50}) {
    const double box = kernel_riemann_mass(KernelSpec(KernelType::box, k));
    const double tri = kernel_riemann_mass(KernelSpec(KernelType::triangular, k));
    const double epa = kernel_riemann_mass(KernelSpec(KernelType::epanechnikov, k));
    CHECK(box == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tri == doctest::Approx(1.0).epsilon(1e-14));
    const double kk = double(k) * double(k);
    CHECK(std::abs(epa - (4.0 * kk - 1.0) / (4.0 * kk)) < 1e-9);
    CHECK(std::abs(epa - 1.0) <= 1.0 / (4.0 * kk) + 1e-15);
  }
  CHECK(kernel_weight(KernelType::box, -0.5) == 0.0);
  CHECK(kernel_weight(KernelType::box, 0.5) == 1.0);
  CHECK(kernel_weight(KernelType::triangular, 0.25) == 0.75);
  CHECK(kernel_weight(KernelType::epanechnikov, 1.5) == 0.0);
  CHECK(parse_kernel("triangular") == KernelType::triangular);
  CHECK_FALSE(parse_kernel("gauss").has_value());
  CHECK_THROWS_AS(KernelSpec(KernelType::box, 0), ArgumentError);
}

TEST_CASE("kernel estimate with uniform counts is the Riemann mass in the interior") {
  const Index cells = 60;
  const Count n = 240;
  const Counts x = Counts::Constant(cells, n / cells);
  for (auto type : {KernelType::box, KernelType::triangular, KernelType::epanechnikov}) {
    const KernelSpec spec(type, 7);
    const auto d = kernel_parent_estimate(x, n, spec);
    const double mass = kernel_riemann_mass(spec);
    for (Index j = 8; j < cells - 8; ++j) CHECK(std::abs(d.heights()(j) - mass) < 1e-9);
  }
}

TEST_CASE("poissonized estimator accepts any total") {
  const auto f = poissonized_estimator(counts({3, 0, 0}), 2);
  REQUIRE(f.size() == 2);
  CHECK(f.knots()(1) == 4.5);
  CHECK(poissonized_estimator(counts({0, 0}), 5) == StepCdf::point_mass(0.0));
}
