// sdfest: batch runner for structural distribution function experiments.
//
//   sdfest simulate --config run.json [--out DIR] [--seed U64] [--quiet]
//   sdfest sweep    --config sweep.json [--out DIR] [--seed U64] [--quiet]
//   sdfest eval     --limit-F x | --limit-g x | --mixture M n x [--parent NAME]
//   sdfest couple-check --M 1000 --n 2000 --draws 200 [--seed U64]
//
// Exit codes: 0 success, 1 runtime or I/O failure, 2 usage or config error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdf/cli/commands.hpp"
#include "sdf/cli/config.hpp"

int main(int argc, char** argv) {
  using namespace sdf::cli;

  CLI::App app{"Structural distribution function estimation experiments"};
  app.require_subcommand(1);
  app.footer("Config schema: docs/config.md. Defaults (defaults.json):\n" + defaults_json());

  std::string config;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--config", config, "JSON run configuration");
  app.add_option("--out", out_dir, "Output directory (overrides out_dir)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed (overrides the config seed)");
  app.add_flag("--quiet", quiet, "Suppress standard output tables");

  auto* simulate = app.add_subcommand("simulate", "Run one scenario and write its CSV files");
  auto* sweep = app.add_subcommand("sweep", "Run a consistency sweep and write sweep.csv");
  for (auto* sub : {simulate, sweep}) sub->fallthrough();

  auto* eval = app.add_subcommand("eval", "Evaluate a closed-form reference quantity");
  eval->fallthrough();
  std::string limit_F;
  std::string limit_g;
  std::vector<std::string> mixture;
  std::string parent = "paper-quintic";
  auto* opt_F = eval->add_option("--limit-F", limit_F, "Limit F(x) of the quintic parent");
  auto* opt_g = eval->add_option("--limit-g", limit_g, "Quintic parent density g(x)");
  auto* opt_mix = eval->add_option("--mixture", mixture, "Poisson mixture expectation: M n x")
                      ->expected(3)
                      ->allow_extra_args(false);
  eval->add_option("--parent", parent, "Parent for --mixture: paper-quintic | uniform");
  opt_F->excludes(opt_g)->excludes(opt_mix);
  opt_g->excludes(opt_mix);

  auto* couple = app.add_subcommand("couple-check", "Verify coupling invariants on random draws");
  couple->fallthrough();
  CoupleCheckOptions cc;
  couple->add_option("--M", cc.cells, "Number of cells")->capture_default_str();
  couple->add_option("--n", cc.n, "Sample size")->capture_default_str();
  couple->add_option("--draws", cc.draws, "Number of coupled draws")->capture_default_str();
  couple->add_option("--parent", cc.parent, "paper-quintic | uniform")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*simulate || *sweep) {
    if (config.empty()) {
      std::cerr << "--config PATH is required\n";
      return kExitUsage;
    }
    RunOptions opts;
    opts.config = config;
    if (!out_dir.empty()) opts.out_dir = out_dir;
    if (seed_opt->count() > 0) opts.seed = seed;
    opts.quiet = quiet;
    return *simulate ? cmd_simulate(opts, std::cout, std::cerr)
                     : cmd_sweep(opts, std::cout, std::cerr);
  }
  if (*eval) {
    EvalRequest req;
    req.parent = parent;
    if (opt_F->count() > 0) {
      req.what = EvalRequest::What::limit_F;
      req.x = limit_F;
    } else if (opt_g->count() > 0) {
      req.what = EvalRequest::What::limit_g;
      req.x = limit_g;
    } else if (opt_mix->count() > 0) {
      req.what = EvalRequest::What::mixture;
      req.cells = mixture[0];
      req.n = mixture[1];
      req.x = mixture[2];
    } else {
      std::cerr << "eval: one of --limit-F, --limit-g, --mixture is required\n";
      return kExitUsage;
    }
    return cmd_eval(req, std::cout, std::cerr);
  }
  if (seed_opt->count() > 0) cc.seed = seed;
  cc.quiet = quiet;
  return cmd_couple_check(cc, std::cout, std::cerr);
}
