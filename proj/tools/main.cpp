#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "l1sdp/commands.hpp"
#include "l1sdp/errors.hpp"

namespace {

using namespace l1sdp::cli;

void add_solver_flags(CLI::App* cmd, l1sdp::conic::SolverSettings& s) {
  cmd->add_option("--tol", s.tol, "Solver relative accuracy")->default_val(1e-7);
  cmd->add_option("--max-iter", s.max_iter, "Solver iteration cap")->default_val(200000);
  cmd->add_flag("--verbose", s.verbose, "Print solver progress to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semidefinite upper bounds and rounding lower bounds for quadratic maximization "
               "over l1, l2/l1 and lp balls"};
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<double> k;
  std::optional<double> p;

  BoundCommand bound;
  auto* bound_cmd = app.add_subcommand("bound", "Solve one relaxation");
  bound_cmd->add_option("--matrix", bound.matrix_path, "Matrix file")->required();
  bound_cmd->add_option("--relaxation", bound.relaxation,
                        "dnn-l1 | dnn-l1-new | sdp-x | dnn-l2l1 | dnn-l2l1-new-le | "
                        "dnn-l2l1-new-eq | dnn-lp")
      ->required();
  bound_cmd->add_option("--k", bound.k, "Sparsity parameter, 1 <= k <= n");
  bound_cmd->add_option("--p", bound.p, "Norm exponent, 1 < p < 2");
  bound_cmd->add_option("--format", format, "text | json")->default_val("text");
  add_solver_flags(bound_cmd, bound.settings);

  CompareCommand compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compute and cross-check all applicable bounds");
  compare_cmd->add_option("--matrix", compare.matrix_path, "Matrix file")->required();
  compare_cmd->add_option("--k", compare.options.k, "Sparsity parameter, 1 <= k <= n");
  compare_cmd->add_option("--p", compare.options.p, "Norm exponent, 1 < p < 2");
  compare_cmd->add_option("--seed", compare.options.seed, "Seed for the multi-start heuristic")
      ->default_val(0);
  compare_cmd->add_option("--restarts", compare.options.restarts, "Multi-start restarts")
      ->default_val(50);
  compare_cmd->add_option("--format", format, "text | json | csv")->default_val("text");
  add_solver_flags(compare_cmd, compare.options.settings);

  ExamplesCommand examples;
  auto* examples_cmd = app.add_subcommand("examples", "Recompute the reference example values");
  examples_cmd->add_option("--tol", examples.tol, "Absolute tolerance against reference values")
      ->default_val(1e-2);
  examples_cmd->add_option("--solver-tol", examples.settings.tol, "Solver relative accuracy")
      ->default_val(1e-7);
  examples_cmd->add_option("--format", format, "text | json | csv")->default_val("text");

  SweepCommand sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-p", "Bounds over a grid of p on a random instance");
  sweep_cmd->add_option("--n", sweep.n, "Matrix order (<= 20)")->default_val(10);
  sweep_cmd->add_option("--seed", sweep.seed, "Instance seed")->default_val(0);
  sweep_cmd->add_option("--grid", sweep.grid, "START:STEP:END inside (1, 2)")
      ->default_val("1.05:0.05:1.95");
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path")->required();
  add_solver_flags(sweep_cmd, sweep.settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Format fmt = Format::Text;
  try {
    fmt = parse_format(format);
  } catch (const l1sdp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (*bound_cmd) {
    bound.format = fmt;
    return cmd_bound(bound, std::cout, std::cerr);
  }
  if (*compare_cmd) {
    compare.format = fmt;
    return cmd_compare(compare, std::cout, std::cerr);
  }
  if (*examples_cmd) {
    examples.format = fmt;
    return cmd_examples(examples, std::cout, std::cerr);
  }
  if (*sweep_cmd) return cmd_sweep_p(sweep, std::cout, std::cerr);
  return kExitInputError;
}
