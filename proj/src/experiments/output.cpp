#include "sdf/experiments/output.hpp"

#include <map>
#include <stdexcept>
#include <system_error>

#include "sdf/experiments/csv.hpp"
#include "sdf/experiments/errors.hpp"

namespace sdf::experiments {
namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());
}

std::string fmt(double v) { return format_double(v); }

Count parse_count(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

template <typename Fn>
auto parse_file(const fs::path& path, Fn&& fn) {
  const CsvTable table = read_csv(path);
  try {
    return fn(table);
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError(path.string(), std::string("malformed CSV: ") + e.what());
  }
}

}  // namespace

void emit_csv(const ScenarioResult& result, const fs::path& dir) {
  ensure_dir(dir);

  CsvTable reps{{"replicate", "estimator", "l1_to_FM", "l1_to_F", "sup_to_F", "second_moment"}, {}};
  for (const auto& r : result.records) {
    reps.rows.push_back({std::to_string(r.replicate), r.estimator, fmt(r.l1_to_FM),
                         fmt(r.l1_to_F), fmt(r.sup_to_F), fmt(r.second_moment)});
  }
  write_csv(dir / kReplicatesCsv, reps);

  CsvTable knots{{"estimator", "knot", "level"}, {}};
  for (const auto& d : result.sdf_dumps) {
    for (Index i = 0; i < d.cdf.size(); ++i) {
      knots.rows.push_back({d.label, fmt(d.cdf.knots()(i)), fmt(d.cdf.levels()(i))});
    }
  }
  write_csv(dir / kSdfKnotsCsv, knots);

  CsvTable dens{{"estimator", "break_lo", "break_hi", "height"}, {}};
  for (const auto& d : result.density_dumps) {
    const Vector<double> b = d.density.breakpoints();
    for (Index j = 0; j < d.density.intervals(); ++j) {
      dens.rows.push_back({d.label, fmt(b(j)), fmt(b(j + 1)), fmt(d.density.heights()(j))});
    }
  }
  write_csv(dir / kDensityKnotsCsv, dens);

  emit_csv(sweep_rows(result), dir);
}

void emit_csv(const SweepTable& table, const fs::path& dir) {
  ensure_dir(dir);
  CsvTable out{{"scale", "M", "n", "estimator", "median_l1", "mean_l1", "stderr_l1"}, {}};
  for (const auto& r : table.rows) {
    out.rows.push_back({std::to_string(r.scale), std::to_string(r.cells), std::to_string(r.n),
                        r.estimator, fmt(r.median_l1), fmt(r.mean_l1), fmt(r.stderr_l1)});
  }
  write_csv(dir / kSweepCsv, out);
}

void emit_csv(const DiagnosticsRecord& record, const fs::path& dir) {
  ensure_dir(dir);
  CsvTable out{{"check", "x_or_label", "monte_carlo_value", "exact_value", "stderr"}, {}};
  for (const auto& r : record.rows) {
    out.rows.push_back({r.check, r.x_or_label, fmt(r.monte_carlo_value), fmt(r.exact_value),
                        fmt(r.stderr_)});
  }
  write_csv(dir / kDiagnosticsCsv, out);
}

std::vector<ReplicateRecord> read_replicates_csv(const fs::path& path) {
  return parse_file(path, [](const CsvTable& t) {
    const std::size_t c_rep = t.column("replicate"), c_est = t.column("estimator"),
                      c_fm = t.column("l1_to_FM"), c_f = t.column("l1_to_F"),
                      c_sup = t.column("sup_to_F"), c_m2 = t.column("second_moment");
    std::vector<ReplicateRecord> out;
    for (const auto& row : t.rows) {
      if (row.size() != t.header.size()) throw std::invalid_argument("ragged row");
      out.push_back({parse_count(row[c_rep]), row[c_est], parse_double(row[c_fm]),
                     parse_double(row[c_f]), parse_double(row[c_sup]), parse_double(row[c_m2])});
    }
    return out;
  });
}

std::vector<NamedCdf> read_sdf_knots_csv(const fs::path& path) {
  return parse_file(path, [](const CsvTable& t) {
    const std::size_t c_est = t.column("estimator"), c_k = t.column("knot"),
                      c_l = t.column("level");
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
    for (const auto& row : t.rows) {
      if (row.size() != t.header.size()) throw std::invalid_argument("ragged row");
      auto [it, inserted] = groups.try_emplace(row[c_est]);
      if (inserted) order.push_back(row[c_est]);
      it->second.first.push_back(parse_double(row[c_k]));
      it->second.second.push_back(parse_double(row[c_l]));
    }
    std::vector<NamedCdf> out;
    for (const auto& label : order) {
      const auto& [k, l] = groups.at(label);
      const auto size = static_cast<Index>(k.size());
      out.push_back({label, StepCdf(Eigen::Map<const Vector<double>>(k.data(), size),
                                    Eigen::Map<const Vector<double>>(l.data(), size))});
    }
    return out;
  });
}

SweepTable read_sweep_csv(const fs::path& path) {
  return parse_file(path, [](const CsvTable& t) {
    const std::size_t c_s = t.column("scale"), c_m = t.column("M"), c_n = t.column("n"),
                      c_e = t.column("estimator"), c_med = t.column("median_l1"),
                      c_mean = t.column("mean_l1"), c_se = t.column("stderr_l1");
    SweepTable out;
    for (const auto& row : t.rows) {
      if (row.size() != t.header.size()) throw std::invalid_argument("ragged row");
      out.rows.push_back({parse_count(row[c_s]), parse_count(row[c_m]), parse_count(row[c_n]),
                          row[c_e], parse_double(row[c_med]), parse_double(row[c_mean]),
                          parse_double(row[c_se])});
    }
    return out;
  });
}

}  // namespace sdf::experiments
