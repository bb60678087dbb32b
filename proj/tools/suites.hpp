#pragma once

// Seeded verification suites. Each criterion is a set of metrics with pinned
// bounds; a criterion passes when every metric does. Results depend only on
// the seed, so two runs with the same seed serialize identically.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "io.hpp"

namespace simplexlift::cli {

struct Metric {
  std::string name;
  double value = 0.0;
  /// One of "<", "<=", ">", ">=", "==".
  std::string relation;
  double bound = 0.0;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  std::vector<Metric> metrics;
  std::vector<std::string> notes;
  /// Set when the criterion threw; the criterion then fails.
  std::string error;

  bool passed() const;
};

struct CriterionSpec {
  int id;
  std::string suite;
  std::string title;
  std::function<void(std::uint64_t seed, CriterionResult&)> run;
};

const std::vector<CriterionSpec>& criteria();

/// "stress", "invariants", "dual", "motion" or "all"; throws InputError otherwise.
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed);
CriterionResult run_criterion(const CriterionSpec& spec, std::uint64_t seed);

Json to_json(const CriterionResult& r);
std::string summary_line(const CriterionResult& r);

}  // namespace simplexlift::cli
