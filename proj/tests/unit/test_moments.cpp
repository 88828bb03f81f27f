#include <cmath>

#include <boost/math/distributions/poisson.hpp>

#include "doctest.h"
#include "sdf/core.hpp"
#include "sdf/experiments/reference.hpp"
#include "support.hpp"

using namespace sdf;

TEST_CASE("second moment examples") {
  CHECK(second_moment(StepCdf::point_mass(1.0)) == 1.0);
  Vector<double> k(2), l(2);
  k << 0.4, 1.6;
  l << 0.5, 1.0;
  CHECK(second_moment(StepCdf(k, l)) == doctest::Approx(1.36).epsilon(1e-15));
  CHECK(second_moment(structural_df(CellProbabilities<double>::uniform(9))) == 1.0);
}

TEST_CASE("second moment of the structural df is M sum p^2 and at least 1") {
  sampling::SeededRng rng(51);
  for (int t = 0; t < 200; ++t) {
    const auto p = test::random_probs(test::random_index(2, 60, rng), rng);
    const double direct = double(p.cells()) * p.probs().squaredNorm();
    const double sm = second_moment(structural_df(p));
    CHECK(sm == doctest::Approx(direct).epsilon(1e-13));
    CHECK(sm >= 1.0 - 1e-14);
    const bool uniform = (p.probs().array() == p.probs()(0)).all();
    if (!uniform) CHECK(sm > 1.0);
  }
}

TEST_CASE("poisson cdf against an independent implementation") {
  for (double mean : {0.3, 1.0, 4.5, 10.0, 37.0, 400.0, 2500.0}) {
    const boost::math::poisson_distribution<double> dist(mean);
    for (Count k : {0, 1, 3, 10, 40, 390, 2600}) {
      const double ref = boost::math::cdf(dist, double(k));
      CHECK(std::abs(poisson_cdf(k, mean) - ref) < 1e-12);
    }
  }
}

TEST_CASE("poisson mixture expectation") {
  const auto p = CellProbabilities<double>::uniform(2);
  CHECK(poisson_mixture_expectation(p, 2, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(poisson_mixture_expectation(p, 2, -0.5) == 0.0);
  CHECK(poisson_mixture_expectation(p, 2, 1e9) == 1.0);
  const auto q = make_cell_probs_from_cdf(experiments::quintic_G, 100);
  double prev = 0.0;
  for (double x = 0.0; x < 5.0; x += 0.05) {
    const double e = poisson_mixture_expectation(q, 200, x);
    CHECK(e >= prev);
    prev = e;
  }
  // largest Poisson mean is 200 * 1.875 / 100 = 3.75; P(Y <= 9) is still short of 1
  CHECK(prev < 1.0);
  CHECK(poisson_mixture_expectation(q, 200, 100.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("largest count respects the estimator rounding") {
  for (Index cells : {3, 7, 1000}) {
    for (Count n : {1, 9, 2000}) {
      for (Count c = 0; c < 50; ++c) {
        const double v = double(cells) * double(c) / double(n);
        CHECK(largest_count_at_or_below(cells, n, v) == c);
      }
    }
  }
  CHECK(largest_count_at_or_below(10, 5, -1e-300) == -1);
}
