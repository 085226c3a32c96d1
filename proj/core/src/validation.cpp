#include "mpemba/validation.hpp"

#include <cmath>
#include <numbers>

#include "mpemba/csv.hpp"
#include "mpemba/entanglement.hpp"
#include "mpemba/lindblad_oracle.hpp"
#include "mpemba/propagator.hpp"
#include "mpemba/timescales.hpp"

namespace mpemba {

XStateParams random_xstate(AuditRng& rng) {
  std::array<double, 4> pop{};
  double total = 0.0;
  for (auto& p : pop) {
    p = -std::log(1.0 - rng.uniform());
    total += p;
  }
  for (auto& p : pop) p /= total;
  // a absorbs the normalization round-off.
  const double a = 1.0 - pop[1] - pop[2] - pop[3];
  const double w = rng.uniform() * std::sqrt(std::max(a, 0.0) * pop[3]);
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return XStateParams::make(a, pop[1], pop[2], pop[3], w, phase);
}

std::optional<std::size_t> ValidationReport::first_failure() const {
  for (const auto& c : cases)
    if (!c.passed()) return c.index;
  return std::nullopt;
}

ValidationReport run_validation(std::uint64_t seed, std::size_t n_cases, const PropagateFn& propagator,
                                double dt) {
  const PropagateFn prop = propagator ? propagator : PropagateFn(propagate);
  AuditRng rng(seed);
  ValidationReport report;
  report.cases.reserve(n_cases);
  for (std::size_t k = 0; k < n_cases; ++k) {
    ValidationCase vc;
    vc.index = k;

    const XStateParams s0 = random_xstate(rng);
    const DampingRates rates(rng.uniform(0.05, 20.0), rng.uniform(0.05, 20.0));
    DensityMatrix4 rho = to_density(s0);
    double t_prev = 0.0;
    for (double t : kValidationTimes) {
      rho = integrate_rk4(rho, rates, IntegratorConfig{dt, t - t_prev});
      t_prev = t;
      const XStateParams exact = prop(s0, rates, t);
      vc.propagator_error = std::max(vc.propagator_error, max_abs_diff(to_density(exact), rho));
      vc.concurrence_error = std::max(
          vc.concurrence_error, std::abs(concurrence_x(exact) - wootters_concurrence(to_density(exact))));
    }

    const double d0 = rng.uniform(0.05, 0.95);
    const double w0 = rng.uniform(0.01, 0.99) * std::min(d0, std::sqrt(d0 * (1.0 - d0)));
    const double gamma = rng.uniform(0.05, 20.0);
    const InitialParams p(d0, w0);
    const double closed = esd_time(p, DampingRates::symmetric(gamma)).time;
    const double target = w0 / d0;
    const DampingRates sym = DampingRates::symmetric(gamma);
    const double bisected = solve_monotone_root(
        [&](double t) { return target - separation_envelope(sym, t); }, 0.0, 1.0 / gamma);
    vc.solver_error = std::abs(closed - bisected);

    report.cases.push_back(vc);
  }
  return report;
}

std::string validation_csv(const ValidationReport& report) {
  std::string out = "case,propagator_error,concurrence_error,solver_error,passed\n";
  for (const auto& c : report.cases) {
    out += csv::join({std::to_string(c.index), csv::format_number(c.propagator_error),
                      csv::format_number(c.concurrence_error), csv::format_number(c.solver_error),
                      c.passed() ? "1" : "0"});
  }
  return out;
}

}  // namespace mpemba
