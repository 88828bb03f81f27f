#include "doctest.h"
#include "sdf/core.hpp"
#include "sdf/experiments/reference.hpp"
#include "support.hpp"

using namespace sdf;

TEST_CASE("grouped population sdf") {
  sampling::SeededRng rng(31);
  for (int t = 0; t < 30; ++t) {
    const Index cells = test::random_index(1, 40, rng);
    const auto scheme = GroupingScheme::equal_size(cells, test::random_index(1, cells, rng));
    // every group height is 1 up to rounding of 1/M
    const auto flat = grouped_population_sdf(CellProbabilities<double>::uniform(cells), scheme);
    CHECK(l1_distance(flat, StepCdf::point_mass(1.0)) < 1e-15);
    CHECK((flat.knots().array() - 1.0).abs().maxCoeff() < 4e-16);
    const auto p = test::random_probs(cells, rng);
    CHECK(grouped_population_sdf(p, GroupingScheme::unit(cells)) == structural_df(p));
    CHECK(grouped_population_sdf(p, scheme) == grouped_population_sdf(p, scheme));
  }
  Vector<double> v(2);
  v << 0.2, 0.8;
  CHECK(grouped_population_sdf(CellProbabilities<double>(v), GroupingScheme::single(2)) ==
        StepCdf::point_mass(1.0));
}

TEST_CASE("kernel population sdf") {
  sampling::SeededRng rng(32);
  for (int t = 0; t < 30; ++t) {
    const auto p = test::random_probs(test::random_index(1, 40, rng), rng);
    CHECK(kernel_population_sdf(p, KernelSpec(KernelType::box, 1)) == structural_df(p));
    const KernelSpec spec(KernelType::triangular, 4);
    CHECK(kernel_population_sdf(p, spec) == kernel_population_sdf(p, spec));
  }
  const auto u = CellProbabilities<double>::uniform(50);
  for (auto type : {KernelType::box, KernelType::triangular, KernelType::epanechnikov}) {
    const KernelSpec spec(type, 6);
    const auto d = kernel_population_density(u, spec);
    for (Index j = 7; j < 43; ++j) {
      CHECK(std::abs(d.heights()(j) - kernel_riemann_mass(spec)) < 1e-12);
    }
  }
}

TEST_CASE("quintic parent at M=1000 is close to its limit") {
  using experiments::QuinticLimit;
  const auto p = make_cell_probs_from_cdf(experiments::quintic_G, 1000);
  const auto f = structural_df(p);
  CHECK(l1_distance(f, QuinticLimit{}) <= 0.01);
  CHECK(sup_distance(f, QuinticLimit{}) <= 0.01);
  CHECK(l1_distance(kernel_population_sdf(p, KernelSpec(KernelType::box, 50)), QuinticLimit{}) <=
        0.05);
}
