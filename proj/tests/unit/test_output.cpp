#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sdf/experiments.hpp"

using namespace sdf;
using namespace sdf::experiments;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sdf_unit_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioConfig config() {
  ScenarioConfig cfg;
  cfg.cells = 80;
  cfg.n = 120;
  cfg.replicates = 6;
  cfg.seed = 3;
  EstimatorSpec g;
  g.kind = EstimatorKind::grouped;
  g.size = SizeRule{SizeRule::Mode::fixed, 8};
  cfg.estimators = {EstimatorSpec{}, g};
  return cfg;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(1.875) == "1.875");
  CHECK(format_double(2.0 * std::exp(-1.0)) == "0.7357588823428847");
  CHECK(format_double(0.1) == "0.1");
  for (double v : {1.0 / 3.0, 2.0 / 3.0, 1e-300, 123456789.123456789, -0.0}) {
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK_THROWS(parse_double("1.8x"));
  CHECK_THROWS(parse_double(""));
  CHECK(parse_double(" 1\r") == 1.0);
  CHECK_THROWS(parse_double("1 2"));
  CHECK(parse_double("-2.5e3") == -2500.0);
}

TEST_CASE("scenario CSV files round trip") {
  const auto dir = fresh_dir("roundtrip");
  const auto res = run_scenario(config());
  emit_csv(res, dir);
  CHECK(fs::exists(dir / kReplicatesCsv));
  CHECK(fs::exists(dir / kSdfKnotsCsv));
  CHECK(fs::exists(dir / kDensityKnotsCsv));
  CHECK(fs::exists(dir / kSweepCsv));
  CHECK_FALSE(fs::exists(dir / kDiagnosticsCsv));

  const auto recs = read_replicates_csv(dir / kReplicatesCsv);
  REQUIRE(recs.size() == res.records.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].estimator == res.records[i].estimator);
    CHECK(recs[i].replicate == res.records[i].replicate);
    CHECK(recs[i].l1_to_F == res.records[i].l1_to_F);
    CHECK(recs[i].l1_to_FM == res.records[i].l1_to_FM);
    CHECK(recs[i].sup_to_F == res.records[i].sup_to_F);
    CHECK(recs[i].second_moment == res.records[i].second_moment);
  }
  const auto knots = read_sdf_knots_csv(dir / kSdfKnotsCsv);
  REQUIRE(knots.size() == res.sdf_dumps.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    CHECK(knots[i].label == res.sdf_dumps[i].label);
    CHECK(knots[i].cdf == res.sdf_dumps[i].cdf);
  }
  const auto sweep = read_sweep_csv(dir / kSweepCsv);
  REQUIRE(sweep.rows.size() == 2);
  CHECK(sweep.rows[1].median_l1 == res.summaries[1].l1_to_F.median);

  const auto header = slurp(dir / kReplicatesCsv).substr(0, 60);
  CHECK(header.rfind("replicate,estimator,l1_to_FM,l1_to_F,sup_to_F,second_moment\n", 0) == 0);
  CHECK(slurp(dir / kDensityKnotsCsv).rfind("estimator,break_lo,break_hi,height\n", 0) == 0);
  CHECK(slurp(dir / kSweepCsv).rfind("scale,M,n,estimator,median_l1,mean_l1,stderr_l1\n", 0) == 0);
  CHECK(slurp(dir / kSdfKnotsCsv).rfind("estimator,knot,level\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("CSV output is byte-identical across runs") {
  const auto a = fresh_dir("bytes_a");
  const auto b = fresh_dir("bytes_b");
  auto cfg = config();
  emit_csv(run_scenario(cfg), a);
  cfg.threads = 3;
  emit_csv(run_scenario(cfg), b);
  for (const char* f : {kReplicatesCsv, kSdfKnotsCsv, kDensityKnotsCsv, kSweepCsv}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("diagnostics CSV") {
  const auto dir = fresh_dir("diag");
  auto cfg = config();
  cfg.eval_grid = {0.5, 1.0};
  cfg.diagnostic_replicates = 50;
  emit_csv(inconsistency_diagnostics(cfg), dir);
  const auto table = read_csv(dir / kDiagnosticsCsv);
  CHECK(table.header ==
        std::vector<std::string>{"check", "x_or_label", "monte_carlo_value", "exact_value", "stderr"});
  CHECK(table.rows.size() == 6);
  fs::remove_all(dir);
}

TEST_CASE("unreadable CSV is an I/O error") {
  CHECK_THROWS_AS(read_csv("/nonexistent/dir/file.csv"), IoError);
}
