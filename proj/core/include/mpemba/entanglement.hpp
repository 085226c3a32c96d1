#pragma once

#include "mpemba/xstate.hpp"

namespace mpemba {

// Initial condition family with b(0) = c(0) = z(0) = 0: only the excited
// population d0 and the coherence modulus w0 are free.
class InitialParams {
 public:
  // Requires d0 in [0,1], w0 >= 0 and w0^2 <= d0*(1-d0) (+1e-12).
  InitialParams(double d0, double w0);

  double d0() const { return d0_; }
  double w0() const { return w0_; }

  // |00>,|11> X state with a = 1 - d0.
  XStateParams to_xstate() const;

  friend bool operator==(const InitialParams&, const InitialParams&) = default;

 private:
  double d0_;
  double w0_;
};

bool is_physical(double d0, double w0);

// 2*max{0, |z| - sqrt(a d), |w| - sqrt(b c)}.
double concurrence_x(const XStateParams& s);

// Closed-form concurrence of the evolved family state at time t >= 0.
double concurrence_closed_form(const InitialParams& p, const DampingRates& rates, double t);

// The quantity inside max{0, .} of the closed form,
// 2*sqrt(gA gB)*(w0 - d0*sqrt((1-gA)(1-gB))). Defined for every real t since
// (1-gA) and (1-gB) share a sign; the finite-difference routines rely on it
// to step across t = 0.
double concurrence_amplitude(const InitialParams& p, const DampingRates& rates, double t);

// Analytic dC/dt for symmetric damping, valid strictly before sudden death.
// A family member with w0 = 0 has C identically zero and returns 0.
double decay_velocity(const InitialParams& p, double gamma, double t);

// Centered difference (C(t+h) - C(t-h)) / 2h for arbitrary rates. Throws
// DomainError if the window touches the kink at sudden death.
double decay_velocity_numeric(const InitialParams& p, const DampingRates& rates, double t,
                              double h = 1e-6);

}  // namespace mpemba
