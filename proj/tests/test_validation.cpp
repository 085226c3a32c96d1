#include <doctest.h>

#include "mpemba/propagator.hpp"
#include "mpemba/validation.hpp"

using namespace mpemba;

TEST_CASE("seeded audit passes") {
  const ValidationReport report = run_validation(42, 10);
  REQUIRE(report.cases.size() == 10);
  CHECK(report.passed());
  for (const auto& c : report.cases) {
    CHECK(c.propagator_error < 1e-6);
    CHECK(c.concurrence_error < 1e-9);
    CHECK(c.solver_error < 1e-10);
  }
}

TEST_CASE("empty audit") {
  const ValidationReport report = run_validation(42, 0);
  CHECK(report.cases.empty());
  CHECK(report.passed());
  CHECK(validation_csv(report) == "case,propagator_error,concurrence_error,solver_error,passed\n");
}

TEST_CASE("audit is reproducible") {
  CHECK(validation_csv(run_validation(7, 3)) == validation_csv(run_validation(7, 3)));
}

TEST_CASE("a corrupted propagator is caught") {
  // Runs the clock 1% fast.
  const PropagateFn corrupted = [](const XStateParams& s0, const DampingRates& r, double t) {
    return propagate(s0, r, 1.01 * t);
  };
  const ValidationReport report = run_validation(42, 5, corrupted);
  REQUIRE(report.first_failure().has_value());
  CHECK(report.cases[*report.first_failure()].propagator_error > 1e-3);
}
