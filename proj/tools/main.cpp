#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace simplexlift::cli;

namespace {

void common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tol", opt.tol, "Relative rank threshold of the stress solver (default 1e-10)");
  cmd->add_option("--quad-depth", opt.quad_depth, "Maximum bisection depth of curved-volume quadrature (default 10)");
  cmd->add_option("--quad-tol", opt.quad_tol, "Relative tolerance of curved-volume quadrature (default 1e-10)");
  cmd->add_option("--seed", opt.seed, "Seed for every random choice (default 42)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opt.out, "Write output to this file instead of standard output");
  cmd->add_flag("!--no-timestamp", opt.timestamp, "Omit the generated_at field");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplexlift: degenerate simplices, their stresses, duals and lifts"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze = app.add_subcommand("analyze", "Stress, partition, invariants and characteristic polynomial of a configuration");
  analyze->add_option("input", opt.input, "Input document (JSON)")->required();
  common_flags(analyze, opt);

  auto* dual = app.add_subcommand("dual", "Dual configuration of a Euclidean degenerate simplex");
  dual->add_option("input", opt.input, "Input document (JSON)")->required();
  dual->add_option("--c", opt.c, "Dual constant c (default 1, or the document's c)");
  common_flags(dual, opt);

  auto* lift = app.add_subcommand("lift", "Volume constraint along a preset motion, or under random lifts of an input");
  lift->add_option("input", opt.input, "Input document (JSON) for random lifts");
  lift->add_option("--preset", opt.preset, "rectangle or trapezoid");
  lift->add_option("--a", opt.a, "Rectangle half-width (default 2)");
  lift->add_option("--b", opt.b, "Rectangle half-height (default 1)");
  lift->add_option("--l", opt.leg, "Trapezoid leg length (default 2)");
  lift->add_option("--d", opt.diagonal, "Trapezoid diagonal length (default 3)");
  lift->add_option("--p", opt.half_base, "Trapezoid lower half-base (default 1.5)");
  lift->add_option("--random", opt.random, "Number of random joint lifts (default 50)");
  lift->add_option("--heights", opt.heights, "Comma-separated t values (presets) or lift heights");
  common_flags(lift, opt);

  auto* verify = app.add_subcommand("verify", "Seeded verification suites");
  verify->add_option("--suite", opt.suite, "stress, invariants, dual, motion or all")
      ->check(CLI::IsMember({"stress", "invariants", "dual", "motion", "all"}));
  common_flags(verify, opt);

  auto* sample = app.add_subcommand("sample", "Sampling experiments on spherical configurations");
  sample->add_option("--theorem", opt.theorem, "spherical-sum or near-case-zero");
  sample->add_option("--n", opt.n, "Dimension n (default 2)");
  sample->add_option("--dim", opt.d, "Sphere dimension d of the simplices (default n + 1)");
  sample->add_option("--count", opt.count, "Number of samples (default 1000)");
  sample->add_option("--heights", opt.heights, "Comma-separated lift heights (near-case-zero)");
  common_flags(sample, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    CommandResult result;
    if (analyze->parsed()) result = cmd_analyze(opt);
    else if (dual->parsed()) result = cmd_dual(opt);
    else if (lift->parsed()) result = cmd_lift(opt);
    else if (verify->parsed()) result = cmd_verify(opt);
    else result = cmd_sample(opt);
    emit(result.text, opt.out);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::string message;
    const int code = exit_code_for(e, message);
    std::cerr << "simplexlift: " << message << "\n";
    return code;
  }
}
