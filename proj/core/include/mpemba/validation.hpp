#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpemba/xstate.hpp"

namespace mpemba {

inline constexpr double kPropagatorTolerance = 1e-6;
inline constexpr double kConcurrenceTolerance = 1e-9;
inline constexpr double kSolverTolerance = 1e-10;
inline constexpr std::array<double, 4> kValidationTimes{0.1, 0.5, 1.0, 5.0};

using PropagateFn = std::function<XStateParams(const XStateParams&, const DampingRates&, double)>;

struct ValidationCase {
  std::size_t index = 0;
  double propagator_error = 0.0;   // max elementwise |closed form - RK4|
  double concurrence_error = 0.0;  // max |concurrence_x - wootters_concurrence|
  double solver_error = 0.0;       // |closed-form ESD time - bisection ESD time|

  bool passed() const {
    return propagator_error < kPropagatorTolerance && concurrence_error < kConcurrenceTolerance &&
           solver_error < kSolverTolerance;
  }
};

struct ValidationReport {
  std::vector<ValidationCase> cases;

  std::optional<std::size_t> first_failure() const;
  bool passed() const { return !first_failure(); }
};

// mt19937_64 with the top 53 bits mapped onto [0, 1). std::uniform_real_distribution
// is implementation-defined, so it is avoided to keep streams portable.
class AuditRng {
 public:
  explicit AuditRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

// Random X state with z = 0: exponential-weight populations, |w| uniform
// in [0, sqrt(a d)], phase uniform.
XStateParams random_xstate(AuditRng& rng);

// Per case: random state and rates in [0.05, 20], compares the propagator
// with RK4 (dt) at 0.1, 0.5, 1, 5; concurrence_x with wootters_concurrence on
// every propagated state; symmetric ESD closed form with bisection.
ValidationReport run_validation(std::uint64_t seed, std::size_t n_cases,
                                const PropagateFn& propagator = {}, double dt = 1e-4);

// case,propagator_error,concurrence_error,solver_error,passed
std::string validation_csv(const ValidationReport& report);

}  // namespace mpemba
