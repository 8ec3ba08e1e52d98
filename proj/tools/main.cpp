#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace cli = wrightfn::cli;

int main(int argc, char** argv) {
  CLI::App app{"Wright function W(a, b | z) for real arguments"};
  app.require_subcommand(1);

  cli::EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate W(a, b | z) at one point");
  eval_cmd->add_option("--a", eval.a, "First parameter")->required();
  eval_cmd->add_option("--b", eval.b, "Second parameter")->required();
  eval_cmd->add_option("--z", eval.z, "Argument")->capture_default_str();
  eval_cmd->add_option("--tol", eval.tol, "Relative quadrature tolerance");
  eval_cmd->add_option("--digits", eval.digits, "Significant digits")->capture_default_str();

  cli::GridOptions grid;
  auto* grid_cmd = app.add_subcommand("grid", "Write W(a, b | z) on an equispaced z grid as CSV");
  grid_cmd->add_option("--a", grid.a, "First parameter")->required();
  grid_cmd->add_option("--b", grid.b, "Second parameter")->required();
  grid_cmd->add_option("--zmin", grid.zmin, "Left end of the grid")->required();
  grid_cmd->add_option("--zmax", grid.zmax, "Right end of the grid")->required();
  grid_cmd->add_option("--n", grid.n, "Number of points")->required();
  grid_cmd->add_option("--tol", grid.tol, "Relative quadrature tolerance");
  grid_cmd->add_option("--digits", grid.digits,
                       "Significant digits (default: shortest round trip)");
  grid_cmd->add_option("--out", grid.out, "Output file, '-' for stdout");
  grid_cmd->add_option("--threads", grid.threads, "Worker threads (default: all cores)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in identity suite");

  int reps = 101;
  auto* bench_cmd = app.add_subcommand("bench", "Time the reference identity rows");
  bench_cmd->add_option("--reps", reps, "Repetitions per row")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  if (eval_cmd->parsed()) return cli::cmd_eval(eval, std::cout, std::cerr);
  if (grid_cmd->parsed()) return cli::cmd_grid(grid, std::cout, std::cerr);
  if (selftest_cmd->parsed()) return cli::cmd_selftest(std::cout);
  if (bench_cmd->parsed()) return cli::cmd_bench(reps, std::cout, std::cerr);
  return cli::kUsage;
}
