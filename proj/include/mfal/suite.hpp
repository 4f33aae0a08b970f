#pragma once

#include <string>
#include <vector>

namespace mfal {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
  int order = 0;  ///< truncation at which the check was certified; 0 when not series based
};

struct SuiteReport {
  std::string suite;
  int order = 0;
  std::vector<CheckResult> checks;  ///< sorted by id

  bool all_passed() const;
  int exit_code() const { return all_passed() ? 0 : 1; }
};

/// core, theta, gamma, alia, loop, all.
std::vector<std::string> suite_names();

/// Runs the checks of `suite` in parallel; `tolerance` bounds numeric residuals.
SuiteReport run_suite(const std::string& suite, int order, double tolerance = 1e-8);

}  // namespace mfal
