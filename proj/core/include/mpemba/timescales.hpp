#pragma once

#include <functional>

#include "mpemba/entanglement.hpp"
#include "mpemba/xstate.hpp"

namespace mpemba {

struct SolverConfig {
  double abs_tol = 1e-12;
  int max_expand = 60;
  // Initial upper bracket, in units of 1 / min(gamma_a, gamma_b).
  double t_seed = 1.0;
};

struct TimescaleResult {
  enum class Kind { Finite, Asymptotic, Immediate, NoCrossing };

  Kind kind = Kind::NoCrossing;
  double time = 0.0;      // meaningful for Finite only
  double residual = 0.0;  // |defining condition| at time, Finite only

  static TimescaleResult finite(double t, double residual) { return {Kind::Finite, t, residual}; }
  static TimescaleResult asymptotic() { return {Kind::Asymptotic, 0.0, 0.0}; }
  static TimescaleResult immediate() { return {Kind::Immediate, 0.0, 0.0}; }
  static TimescaleResult no_crossing() { return {Kind::NoCrossing, 0.0, 0.0}; }

  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const TimescaleResult&, const TimescaleResult&) = default;
};

const char* to_string(TimescaleResult::Kind kind);

// Root of a continuous, strictly monotone f on [lo, inf): doubles the bracket
// from hi_seed until the sign flips, then bisects to cfg.abs_tol (or until the
// bracket cannot shrink in double precision). Returns the final midpoint.
double solve_monotone_root(const std::function<double(double)>& f, double lo, double hi_seed,
                           const SolverConfig& cfg = {});

// sqrt((1 - gA(t)) (1 - gB(t))), the decay envelope shared by the ESD and
// crossing conditions.
double separation_envelope(const DampingRates& rates, double t);

TimescaleResult esd_time(const InitialParams& p, const DampingRates& rates,
                         const SolverConfig& cfg = {});

TimescaleResult crossing_time(const InitialParams& p1, const InitialParams& p2,
                              const DampingRates& rates, const SolverConfig& cfg = {});

// Concurrence shared by both trajectories at their crossing. Throws
// Error(NoCrossing) unless crossing_time is Finite.
double crossing_concurrence(const InitialParams& p1, const InitialParams& p2,
                            const DampingRates& rates, const SolverConfig& cfg = {});

}  // namespace mpemba
