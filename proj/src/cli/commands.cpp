#include "sdf/cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "sdf/cli/config.hpp"
#include "sdf/core/moments.hpp"
#include "sdf/experiments.hpp"
#include "sdf/sampling/coupling.hpp"

namespace sdf::cli {
namespace {

using experiments::ConfigError;
using experiments::format_double;
using experiments::IoError;

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void print_sweep(std::ostream& out, const experiments::SweepTable& table) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) {
    rows.push_back({std::to_string(r.scale), std::to_string(r.cells), std::to_string(r.n),
                    r.estimator, format_double(r.median_l1), format_double(r.mean_l1),
                    format_double(r.stderr_l1)});
  }
  print_table(out, {"scale", "M", "n", "estimator", "median_l1", "mean_l1", "stderr_l1"}, rows);
}

void print_diagnostics(std::ostream& out, const experiments::DiagnosticsRecord& rec) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rec.rows) {
    rows.push_back({r.check, r.x_or_label, format_double(r.monte_carlo_value),
                    format_double(r.exact_value), format_double(r.stderr_)});
  }
  print_table(out, {"check", "x_or_label", "monte_carlo_value", "exact_value", "stderr"}, rows);
}

bool parse_positive(const std::string& text, Count& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) return false;
    value = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

experiments::Parent named_parent(const std::string& name) {
  if (name == "paper-quintic") return experiments::Parent::paper_quintic();
  if (name == "uniform") return experiments::Parent::uniform();
  throw ConfigError("parent", "unknown parent '" + name + "' (paper-quintic or uniform)");
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

CliConfig load_with_overrides(const RunOptions& opts, ConfigMode mode) {
  CliConfig cfg = load_config(opts.config, mode);
  if (opts.seed) cfg.scenario.seed = *opts.seed;
  if (opts.out_dir) cfg.out_dir = *opts.out_dir;
  if (opts.quiet) cfg.quiet = true;
  return cfg;
}

}  // namespace

int cmd_simulate(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CliConfig cfg = load_with_overrides(opts, ConfigMode::simulate);
    const auto result = experiments::run_scenario(cfg.scenario);
    experiments::emit_csv(result, cfg.out_dir);
    std::optional<experiments::DiagnosticsRecord> diag;
    if (!cfg.scenario.eval_grid.empty()) {
      diag = experiments::inconsistency_diagnostics(cfg.scenario);
      experiments::emit_csv(*diag, cfg.out_dir);
    }
    if (!cfg.quiet) {
      print_sweep(out, experiments::sweep_rows(result));
      if (diag) {
        out << '\n';
        print_diagnostics(out, *diag);
      }
    }
    return kExitOk;
  });
}

int cmd_sweep(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CliConfig cfg = load_with_overrides(opts, ConfigMode::sweep);
    const auto table = experiments::consistency_sweep(cfg.scenario, cfg.scales);
    experiments::emit_csv(table, cfg.out_dir);
    if (!cfg.quiet) print_sweep(out, table);
    return kExitOk;
  });
}

int cmd_eval(const EvalRequest& req, std::ostream& out, std::ostream& err) {
  double x = 0.0;
  try {
    x = experiments::parse_double(req.x);
  } catch (const std::exception& e) {
    err << "eval: " << e.what() << '\n';
    return kExitUsage;
  }
  switch (req.what) {
    case EvalRequest::What::limit_F:
      out << format_double(experiments::limit_F_eval(x)) << '\n';
      return kExitOk;
    case EvalRequest::What::limit_g:
      out << format_double(experiments::limit_g_eval(x)) << '\n';
      return kExitOk;
    case EvalRequest::What::mixture: {
      Count cells = 0;
      Count n = 0;
      if (!parse_positive(req.cells, cells) || !parse_positive(req.n, n)) {
        err << "eval: --mixture expects positive integers M and n\n";
        return kExitUsage;
      }
      return guarded(err, [&] {
        const auto probs = named_parent(req.parent).cell_probs(cells);
        out << format_double(poisson_mixture_expectation(probs, n, x)) << '\n';
        return kExitOk;
      });
    }
  }
  return kExitUsage;
}

int cmd_couple_check(const CoupleCheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.cells < 1 || opts.n < 1 || opts.draws < 0) {
      throw ConfigError("couple-check", "M and n must be positive, draws nonnegative");
    }
    const auto probs = named_parent(opts.parent).cell_probs(opts.cells);
    std::vector<double> bounds;
    Count violations = 0;
    double max_sup = 0.0;
    double max_l1 = 0.0;
    for (Count d = 0; d < opts.draws; ++d) {
      auto rng = sampling::SeededRng::stream(opts.seed, experiments::kCouplingStream,
                                             static_cast<std::uint32_t>(d));
      const auto check = sampling::coupling_l1_bound(sampling::sample_coupled(probs, opts.n, rng));
      if (!check.holds()) {
        ++violations;
        err << "draw " << d << ": coupling invariant violated\n";
      }
      bounds.push_back(check.bound);
      max_sup = std::max(max_sup, check.sup_distance);
      max_l1 = std::max(max_l1, check.l1_distance);
    }
    if (!opts.quiet) {
      const auto s = experiments::summarize(bounds);
      const double expected =
          experiments::poisson_mean_absolute_deviation(opts.n) / static_cast<double>(opts.cells);
      print_table(out, {"quantity", "value"},
                  {{"draws", std::to_string(opts.draws)},
                   {"violations", std::to_string(violations)},
                   {"median_bound", format_double(s.median)},
                   {"mean_bound", format_double(s.mean)},
                   {"expected_bound", format_double(expected)},
                   {"max_sup_distance", format_double(max_sup)},
                   {"max_l1_distance", format_double(max_l1)}});
    }
    return violations == 0 ? kExitOk : kExitRuntime;
  });
}

}  // namespace sdf::cli
