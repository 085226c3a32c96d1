#include "mpemba/timescales.hpp"

#include <cmath>

#include "mpemba/error.hpp"

namespace mpemba {

const char* to_string(TimescaleResult::Kind kind) {
  switch (kind) {
    case TimescaleResult::Kind::Finite: return "Finite";
    case TimescaleResult::Kind::Asymptotic: return "Asymptotic";
    case TimescaleResult::Kind::Immediate: return "Immediate";
    case TimescaleResult::Kind::NoCrossing: return "NoCrossing";
  }
  return "Unknown";
}

double solve_monotone_root(const std::function<double(double)>& f, double lo, double hi_seed,
                           const SolverConfig& cfg) {
  if (!(cfg.abs_tol > 0.0)) throw Error(ErrorKind::DomainError, "solver tolerance must be positive");
  const double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  const bool lo_negative = f_lo < 0.0;

  double a = lo;
  double b = hi_seed > lo ? hi_seed : lo + 1.0;
  double f_b = f(b);
  int expansions = 0;
  while ((f_b < 0.0) == lo_negative && f_b != 0.0) {
    if (expansions == cfg.max_expand)
      throw Error(ErrorKind::NoConvergence, "bracket expansion cap reached without a sign change");
    a = b;
    b = lo + 2.0 * (b - lo);
    f_b = f(b);
    ++expansions;
  }
  if (f_b == 0.0) return b;

  while (b - a > cfg.abs_tol) {
    const double mid = a + 0.5 * (b - a);
    if (mid <= a || mid >= b) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == lo_negative)
      a = mid;
    else
      b = mid;
  }
  return a + 0.5 * (b - a);
}

double separation_envelope(const DampingRates& rates, double t) {
  const double one_minus_ga = -std::expm1(-rates.gamma_a() * t);
  const double one_minus_gb = -std::expm1(-rates.gamma_b() * t);
  return std::sqrt(one_minus_ga * one_minus_gb);
}

namespace {

// Time at which separation_envelope reaches target, 0 < target < 1.
TimescaleResult solve_envelope(double target, const DampingRates& rates, const SolverConfig& cfg) {
  if (rates.is_symmetric()) {
    return TimescaleResult::finite(-std::log1p(-target) / rates.gamma_a(), 0.0);
  }
  const auto condition = [&](double t) { return target - separation_envelope(rates, t); };
  const double t = solve_monotone_root(condition, 0.0, cfg.t_seed / rates.min_rate(), cfg);
  return TimescaleResult::finite(t, std::abs(condition(t)));
}

}  // namespace

TimescaleResult esd_time(const InitialParams& p, const DampingRates& rates, const SolverConfig& cfg) {
  if (p.w0() == 0.0) return TimescaleResult::immediate();
  if (p.w0() >= p.d0()) return TimescaleResult::asymptotic();
  return solve_envelope(p.w0() / p.d0(), rates, cfg);
}

TimescaleResult crossing_time(const InitialParams& p1, const InitialParams& p2,
                              const DampingRates& rates, const SolverConfig& cfg) {
  const double dw = p1.w0() - p2.w0();
  const double dd = p1.d0() - p2.d0();
  if (dd == 0.0) return TimescaleResult::no_crossing();
  if (dw == 0.0) return TimescaleResult::finite(0.0, 0.0);
  const double ratio = dw / dd;
  if (!(ratio > 0.0 && ratio < 1.0)) return TimescaleResult::no_crossing();
  // The signed amplitudes also meet after both trajectories have died; only a
  // meeting at strictly positive concurrence counts.
  if (!(p1.w0() - p1.d0() * ratio > 0.0)) return TimescaleResult::no_crossing();
  return solve_envelope(ratio, rates, cfg);
}

double crossing_concurrence(const InitialParams& p1, const InitialParams& p2,
                            const DampingRates& rates, const SolverConfig& cfg) {
  const TimescaleResult cross = crossing_time(p1, p2, rates, cfg);
  if (!cross.is_finite()) throw Error(ErrorKind::NoCrossing, "trajectories do not cross");
  return concurrence_closed_form(p1, rates, cross.time);
}

}  // namespace mpemba
