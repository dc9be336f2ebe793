#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bergkern/verify.hpp"

using namespace bergkern;

TEST_CASE("tolerance formatting") {
  CHECK(format_tolerance(1e-12) == "1e-12");
  CHECK(format_tolerance(1e-3) == "1e-3");
  CHECK(format_tolerance(0.02) == "0.02");
  CHECK(format_tolerance(0.05) == "0.05");
  CHECK(format_tolerance(2.5e-7) == "2.5e-07");
}

TEST_CASE("check lines") {
  const CheckResult a = check_at_most("series-vs-closed-form N=200", 2.6e-15, 1e-12);
  CHECK(a.pass);
  CHECK(a.line().rfind("series-vs-closed-form N=200 ≤ 1e-12: PASS (measured ", 0) == 0);
  const CheckResult b = check_at_most("x", 2e-3, 1e-3, "h = 1e-3");
  CHECK_FALSE(b.pass);
  CHECK(b.line().find(": FAIL (measured ") != std::string::npos);
  CHECK(b.line().find("; h = 1e-3)") != std::string::npos);
  CHECK_FALSE(check_at_most("nan", std::nan(""), 1.0).pass);
  CHECK(check_greater("eig", 0.1, 0.0).pass);
  CHECK_FALSE(check_greater("eig", 0.0, 0.0).pass);
  CHECK(check_in_band("ratio", 4.0, 3.5, 4.5).pass);
  CHECK(check_in_band("ratio", 4.0, 3.5, 4.5).criterion == "in [3.5, 4.5]");
  CHECK_FALSE(check_in_band("ratio", 4.6, 3.5, 4.5).pass);
}

TEST_CASE("suite registry") {
  CHECK(suite_names() == std::vector<std::string>{"disc", "annulus", "transport", "projections", "ball"});
  CHECK_THROWS_AS(run_suite("sphere"), std::invalid_argument);
  SuiteReport r{"x", {check_greater("a", 1, 0), check_greater("b", 1, 0)}};
  CHECK(r.passed());
  r.checks.push_back(check_greater("c", 0, 0));
  CHECK_FALSE(r.passed());
}

TEST_CASE("annulus and projection suites pass") {
  for (const SuiteReport& r : {verify_annulus(), verify_projections()}) {
    for (const CheckResult& c : r.checks) {
      INFO(c.line());
      CHECK(c.pass);
    }
  }
}
