#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bergkern {

struct CheckResult {
  std::string name;
  std::string criterion;  // e.g. "≤ 1e-12", "in [3.5, 4.5]", "> 0"
  double measured = 0.0;
  bool pass = false;
  std::string note;

  /// "<name> <criterion>: PASS|FAIL (measured m[; note])"
  std::string line() const;
};

CheckResult check_at_most(std::string name, double measured, double tolerance, std::string note = {});
CheckResult check_greater(std::string name, double measured, double bound, std::string note = {});
CheckResult check_in_band(std::string name, double measured, double lo, double hi, std::string note = {});

/// "1e-12" for exact powers of ten, otherwise shortest round-trip text.
std::string format_tolerance(double tol);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Suites: disc, annulus, transport, projections, ball.
const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
std::vector<SuiteReport> run_suite(std::string_view name);

SuiteReport verify_disc();
SuiteReport verify_annulus();
SuiteReport verify_transport();
SuiteReport verify_projections();
SuiteReport verify_ball();

}  // namespace bergkern
