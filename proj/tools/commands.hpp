#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "io.hpp"

namespace simplexlift::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kAssumption = 2, kVerification = 3 };

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  std::optional<double> tol;
  std::optional<int> quad_depth;
  std::optional<double> quad_tol;
  std::optional<std::uint64_t> seed;
  bool timestamp = true;

  std::optional<double> c;

  std::string preset;
  double a = 2.0, b = 1.0;
  double leg = 2.0, diagonal = 3.0, half_base = 1.5;
  std::optional<int> random;
  std::string heights;

  std::string suite = "all";

  std::string theorem = "spherical-sum";
  int n = 2;
  std::optional<int> d;
  int count = 1000;
};

struct CommandResult {
  std::string text;
  int exit_code = kOk;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

CommandResult cmd_analyze(const Options& opt);
CommandResult cmd_dual(const Options& opt);
CommandResult cmd_lift(const Options& opt);
CommandResult cmd_verify(const Options& opt);
CommandResult cmd_sample(const Options& opt);

/// Maps a library exception to an exit code and a message naming the
/// violated assumption.
int exit_code_for(const std::exception& e, std::string& message);

}  // namespace simplexlift::cli
