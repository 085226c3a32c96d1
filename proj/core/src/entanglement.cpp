#include "mpemba/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "mpemba/error.hpp"
#include "mpemba/propagator.hpp"

namespace mpemba {

bool is_physical(double d0, double w0) {
  return std::isfinite(d0) && std::isfinite(w0) && d0 >= 0.0 && d0 <= 1.0 && w0 >= 0.0 &&
         w0 * w0 <= d0 * (1.0 - d0) + kPositivityTolerance;
}

InitialParams::InitialParams(double d0, double w0) : d0_(d0), w0_(w0) {
  if (!std::isfinite(d0) || !std::isfinite(w0) || d0 < 0.0 || d0 > 1.0 || w0 < 0.0)
    throw Error(ErrorKind::RangeViolation, "require 0 <= d0 <= 1 and w0 >= 0");
  if (!is_physical(d0, w0))
    throw Error(ErrorKind::PositivityViolation, "w0^2 > d0*(1-d0): outside the physical semicircle");
}

XStateParams InitialParams::to_xstate() const {
  return XStateParams::make(1.0 - d0_, 0.0, 0.0, d0_, w0_, 0.0);
}

double concurrence_x(const XStateParams& s) {
  const double outer = s.z_mod() - std::sqrt(s.a() * s.d());
  const double inner = s.w_mod() - std::sqrt(s.b() * s.c());
  return 2.0 * std::max({0.0, outer, inner});
}

double concurrence_amplitude(const InitialParams& p, const DampingRates& rates, double t) {
  const double ga = std::exp(-rates.gamma_a() * t);
  const double gb = std::exp(-rates.gamma_b() * t);
  const double one_minus_ga = -std::expm1(-rates.gamma_a() * t);
  const double one_minus_gb = -std::expm1(-rates.gamma_b() * t);
  // Signed root so the amplitude stays smooth through t = 0 for difference stencils.
  const double envelope = std::copysign(std::sqrt(one_minus_ga * one_minus_gb), one_minus_ga);
  return 2.0 * std::sqrt(ga * gb) * (p.w0() - p.d0() * envelope);
}

double concurrence_closed_form(const InitialParams& p, const DampingRates& rates, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "time must be non-negative");
  return std::max(0.0, concurrence_amplitude(p, rates, t));
}

double decay_velocity(const InitialParams& p, double gamma, double t) {
  const DampingRates rates = DampingRates::symmetric(gamma);
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "time must be non-negative");
  if (p.w0() == 0.0) return 0.0;
  if (concurrence_amplitude(p, rates, t) <= 0.0)
    throw Error(ErrorKind::DomainError, "velocity requested at or after sudden death");
  const double g = damping_factor(gamma, t);
  return -gamma * g * (p.w0() - p.d0() + 2.0 * g * p.d0());
}

double decay_velocity_numeric(const InitialParams& p, const DampingRates& rates, double t,
                              double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::DomainError, "finite-difference step must be positive");
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "time must be non-negative");
  if (p.w0() == 0.0) return 0.0;
  const double hi = concurrence_amplitude(p, rates, t + h);
  const double lo = concurrence_amplitude(p, rates, t - h);
  if (hi <= 0.0 || lo <= 0.0)
    throw Error(ErrorKind::DomainError, "difference window straddles sudden death");
  return (hi - lo) / (2.0 * h);
}

}  // namespace mpemba
