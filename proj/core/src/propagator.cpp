#include "mpemba/propagator.hpp"

#include <cmath>

#include "mpemba/entanglement.hpp"
#include "mpemba/error.hpp"

namespace mpemba {

double damping_factor(double gamma, double t) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error(ErrorKind::DomainError, "decay rate must be positive and finite");
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "time must be non-negative");
  return std::exp(-gamma * t);
}

XStateParams propagate(const XStateParams& s0, const DampingRates& rates, double t) {
  if (s0.z_mod() != 0.0)
    throw Error(ErrorKind::DomainError, "propagation is defined for z = 0 only");
  const double ga = damping_factor(rates.gamma_a(), t);
  const double gb = damping_factor(rates.gamma_b(), t);
  if (t == 0.0) return s0;
  // 1 - gamma via expm1 keeps small-t populations accurate.
  const double decayed_a = -std::expm1(-rates.gamma_a() * t);
  const double decayed_b = -std::expm1(-rates.gamma_b() * t);

  const double d = s0.d() * ga * gb;
  // Qubit A is the high bit: |11> -> |01> when A decays and B survives,
  // and |01> itself decays through B.
  const double b = s0.d() * gb * decayed_a + s0.b() * gb;
  // |11> -> |10> when B decays and A survives; |10> decays through A.
  const double c = s0.d() * ga * decayed_b + s0.c() * ga;
  const double a = 1.0 - b - c - d;
  const double w = s0.w_mod() * std::sqrt(ga * gb);
  return XStateParams::make(a, b, c, d, w, s0.w_phase());
}

TimeGrid::TimeGrid(double t_start, double t_end, std::size_t n_points)
    : t_start_(t_start), t_end_(t_end), n_points_(n_points) {
  if (!(std::isfinite(t_start) && std::isfinite(t_end) && t_start >= 0.0 && t_end > t_start))
    throw Error(ErrorKind::DomainError, "time grid needs 0 <= t_start < t_end");
  if (n_points < 2) throw Error(ErrorKind::DomainError, "time grid needs at least two points");
}

double TimeGrid::at(std::size_t i) const {
  if (i + 1 == n_points_) return t_end_;
  return t_start_ + (t_end_ - t_start_) * static_cast<double>(i) / static_cast<double>(n_points_ - 1);
}

Trajectory evolve_trajectory(const XStateParams& s0, const DampingRates& rates, const TimeGrid& grid) {
  Trajectory traj{grid, {}, {}};
  traj.states.reserve(grid.size());
  traj.concurrences.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    traj.states.push_back(propagate(s0, rates, grid.at(i)));
    traj.concurrences.push_back(concurrence_x(traj.states.back()));
  }
  return traj;
}

}  // namespace mpemba
