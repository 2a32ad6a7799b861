// invsq: genericity checks, multistart solving and the coaxial reduction
// for the paired-point inverse-square distance system.

#include <iostream>

#include "CLI11.hpp"
#include "invsq/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Inverse-square distance system solver"};
  app.require_subcommand(1);

  std::string check_config;
  auto* check = app.add_subcommand("check", "Evaluate conditions (i) and (ii) on a configuration");
  check->add_option("--config", check_config, "Configuration file")->required();

  invsq::cli::SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Enumerate real solutions (TSV on stdout)");
  solve->add_option("--config", solve_args.config_path, "Configuration file")->required();
  solve->add_option("--starts", solve_args.starts, "Random Newton starts")->capture_default_str();
  solve->add_option("--seed", solve_args.seed, "Seed for the random starts")->capture_default_str();
  solve->add_option("--tol", solve_args.tol, "Residual norm accepted as a solution")->capture_default_str();
  solve->add_flag("--extended", solve_args.extended, "Include the seventh anchor G");
  solve->add_flag("--force", solve_args.force, "Solve even if the genericity conditions fail");
  solve->add_option("--threads", solve_args.threads, "Worker threads (0: all cores)")->capture_default_str();

  invsq::cli::CoaxialArgs coax_args;
  auto* coaxial = app.add_subcommand("coaxial", "Exact reduction of a coaxial two-circle configuration");
  coaxial->add_option("--r1", coax_args.r1, "Distance from the origin to the first circle")->required();
  coaxial->add_option("--r2", coax_args.r2, "Distance from the origin to the second circle")->required();
  coaxial->add_option("--a3", coax_args.a3, "Height of the first circle's plane")->required();
  coaxial->add_option("--d3", coax_args.d3, "Height of the second circle's plane")->required();
  coaxial->add_option("--u", coax_args.u, "Axis coordinate of X*")->required();
  coaxial->add_option("--v", coax_args.v, "Axis coordinate of Y*")->required();
  coaxial->add_option("--precision", coax_args.precision, "Root isolation width")->capture_default_str();

  invsq::cli::BadSurfaceArgs bad_args;
  auto* bad = app.add_subcommand("badsurface", "Sample the surface of seventh anchors that keep an extra solution");
  bad->add_option("--config", bad_args.config_path, "Configuration file")->required();
  bad->add_option("--box", bad_args.box, "x0 x1 y0 y1 z0 z1")->required();
  bad->add_option("--grid", bad_args.grid, "Samples per axis")->capture_default_str();
  bad->add_option("--starts", bad_args.starts, "Random Newton starts for collecting extras")->capture_default_str();
  bad->add_option("--seed", bad_args.seed, "Seed for the random starts")->capture_default_str();
  bad->add_flag("--force", bad_args.force, "Solve even if the genericity conditions fail");
  bad->add_option("--threads", bad_args.threads, "Worker threads (0: all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : invsq::cli::kExitUsage;
  }

  if (*check) return invsq::cli::run_check(check_config, std::cout, std::cerr);
  if (*solve) return invsq::cli::run_solve(solve_args, std::cout, std::cerr);
  if (*coaxial) return invsq::cli::run_coaxial(coax_args, std::cout, std::cerr);
  return invsq::cli::run_badsurface(bad_args, std::cout, std::cerr);
}
