#include <algorithm>
#include <random>

#include "doctest.h"
#include "sdf/core.hpp"
#include "support.hpp"

using namespace sdf;

namespace {

Vector<double> vec(std::initializer_list<double> v) {
  Vector<double> out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

void check_well_formed(const StepCdf& f) {
  REQUIRE(f.size() >= 1);
  CHECK(f.levels()(f.size() - 1) == 1.0);
  for (Index i = 0; i < f.size(); ++i) {
    if (i > 0) {
      CHECK(f.knots()(i) > f.knots()(i - 1));
      CHECK(f.levels()(i) > f.levels()(i - 1));
    }
    const double x = f.knots()(i);
    CHECK(f(x) == f.levels()(i));
    CHECK(f(x + 1e-12 * std::max(1.0, std::abs(x))) == f.levels()(i));
    CHECK(f(x - 1e-12 * std::max(1.0, std::abs(x))) == (i == 0 ? 0.0 : f.levels()(i - 1)));
    CHECK(f.left_limit(x) == (i == 0 ? 0.0 : f.levels()(i - 1)));
  }
}

}  // namespace

TEST_CASE("structural df examples") {
  const auto half = structural_df(CellProbabilities<double>(vec({0.5, 0.5})));
  CHECK(half == StepCdf::point_mass(1.0));

  const auto f = structural_df(CellProbabilities<double>(vec({0.2, 0.8})));
  REQUIRE(f.size() == 2);
  CHECK(f.knots()(0) == 0.4);
  CHECK(f.knots()(1) == 1.6);
  CHECK(f.levels()(0) == 0.5);
  CHECK(f.levels()(1) == 1.0);
}

TEST_CASE("parent density examples") {
  const auto d = parent_density(CellProbabilities<double>::uniform(4));
  for (Index i = 0; i < 4; ++i) CHECK(d.heights()(i) == 1.0);
  CHECK(d.integral() == 1.0);
  CHECK(d(0.01) == 1.0);
  CHECK(d(1.0) == 1.0);

  const auto e = parent_density(CellProbabilities<double>(vec({0.2, 0.8})));
  CHECK(e.heights()(0) == 0.4);
  CHECK(e.heights()(1) == 1.6);
  CHECK(e(0.5) == 0.4);
  CHECK(e(0.51) == 1.6);
  const auto bp = e.breakpoints();
  REQUIRE(bp.size() == 3);
  CHECK(bp(1) == 0.5);
}

TEST_CASE("sdf of density examples") {
  CHECK(sdf_of_density(parent_density(CellProbabilities<double>::uniform(7))) ==
        StepCdf::point_mass(1.0));
  const StepDensity d(GroupingScheme::unit(2), vec({0.4, 1.6}));
  const auto f = sdf_of_density(d);
  REQUIRE(f.size() == 2);
  CHECK(f.knots()(0) == 0.4);
  CHECK(f.levels()(0) == 0.5);
  CHECK(f.levels()(1) == 1.0);
}

TEST_CASE("structural df round trip through the parent density, bit exact") {
  sampling::SeededRng rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto p = test::random_probs(test::random_index(1, 50, rng), rng);
    const auto f = structural_df(p);
    CHECK(sdf_of_density(parent_density(p)) == f);
    check_well_formed(f);
    // parent density integrates to one
    CHECK(std::abs(parent_density(p).integral() - 1.0) < 1e-14);
  }
}

TEST_CASE("structural df is permutation invariant") {
  sampling::SeededRng rng(12);
  std::mt19937_64 shuffle_rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto p = test::random_probs(test::random_index(1, 50, rng), rng);
    std::vector<double> v(p.probs().data(), p.probs().data() + p.cells());
    std::shuffle(v.begin(), v.end(), shuffle_rng);
    const Vector<double> raw = 1.0000000003 * p.probs();
    const CellProbabilities<double> a(raw);
    const CellProbabilities<double> b(Eigen::Map<Vector<double>>(v.data(), p.cells()) * 1.0000000003);
    CHECK(structural_df(a) == structural_df(b));
  }
}

TEST_CASE("step cdf validation") {
  CHECK_THROWS_AS(StepCdf(vec({0.0, 1.0}), vec({0.5, 0.9})), ArgumentError);
  CHECK_THROWS_AS(StepCdf(vec({1.0, 0.0}), vec({0.5, 1.0})), ArgumentError);
  CHECK_THROWS_AS(StepCdf(vec({0.0, 1.0}), vec({0.6, 0.5})), ArgumentError);
  CHECK_THROWS_AS(StepCdf(vec({0.0}), vec({1.0, 1.0})), ArgumentError);
  CHECK_THROWS_AS(StepCdf::from_weighted_atoms(vec({1.0}), Counts::Zero(1)), ArgumentError);
  const StepCdf merged(vec({0.0, 1.0, 1.0, 2.0}), vec({0.25, 0.5, 0.75, 1.0}));
  REQUIRE(merged.size() == 3);
  CHECK(merged(1.0) == 0.75);
  const StepCdf dropped(vec({0.0, 1.0, 2.0}), vec({0.5, 0.5, 1.0}));
  CHECK(dropped.size() == 2);
  check_well_formed(merged);
}

TEST_CASE("empirical and masses constructors") {
  const auto e = StepCdf::empirical(vec({3.0, 1.0, 2.0, 1.0}));
  REQUIRE(e.size() == 3);
  CHECK(e(1.0) == 0.5);
  CHECK(e(2.5) == 0.75);
  const auto m = StepCdf::from_masses(vec({2.0, 1.0, 5.0}), vec({0.1, 0.2, 0.7}));
  CHECK(m.knots()(0) == 1.0);
  CHECK(m.levels()(2) == 1.0);
  CHECK(m(1.5) == doctest::Approx(0.2 / 1.0).epsilon(1e-15));
}

TEST_CASE("long double instantiation") {
  using L = long double;
  Vector<L> p(3);
  p << L(1) / 6, L(1) / 3, L(1) / 2;
  const CellProbabilities<L> cp(p);
  const auto f = structural_df(cp);
  REQUIRE(f.size() == 3);
  CHECK(f.levels()(2) == L(1));
  Counts x(3);
  x << 1, 2, 3;
  CHECK(grouped_estimator<L>(x, 6, GroupingScheme::unit(3)) == natural_estimator<L>(x, 6));
  CHECK(kernel_estimator<L>(x, 6, KernelSpec(KernelType::box, 1)) == natural_estimator<L>(x, 6));
  CHECK(std::abs(static_cast<double>(l1_distance(f, f))) == 0.0);
  CHECK(second_moment(BasicStepCdf<L>::point_mass(L(2))) == L(4));
}
