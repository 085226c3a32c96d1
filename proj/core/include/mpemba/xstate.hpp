#pragma once

#include "mpemba/linalg.hpp"

namespace mpemba {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-12;

using DensityMatrix4 = Matrix4;

// Two-qubit X state: populations a,b,c,d of |00>,|01>,|10>,|11>, the
// |00><11| coherence w = w_mod*exp(i*w_phase) and the |01><10| coherence z.
// Phases are stored normalized into [0, 2*pi).
class XStateParams {
 public:
  // Validated construction with z = 0.
  static XStateParams make(double a, double b, double c, double d, double w_mod, double w_phase);
  // Validated construction with an explicit z coherence (used by from_density).
  static XStateParams make_general(double a, double b, double c, double d, double w_mod,
                                   double w_phase, double z_mod, double z_phase);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double w_mod() const { return w_mod_; }
  double w_phase() const { return w_phase_; }
  double z_mod() const { return z_mod_; }
  double z_phase() const { return z_phase_; }

  friend bool operator==(const XStateParams&, const XStateParams&) = default;

 private:
  XStateParams() = default;

  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
  double w_mod_ = 0.0;
  double w_phase_ = 0.0;
  double z_mod_ = 0.0;
  double z_phase_ = 0.0;
};

// Independent local amplitude-damping rates, both strictly positive.
class DampingRates {
 public:
  DampingRates(double gamma_a, double gamma_b);

  static DampingRates symmetric(double gamma) { return {gamma, gamma}; }

  double gamma_a() const { return gamma_a_; }
  double gamma_b() const { return gamma_b_; }
  bool is_symmetric() const { return gamma_a_ == gamma_b_; }
  double max_rate() const;
  double min_rate() const;

  friend bool operator==(const DampingRates&, const DampingRates&) = default;

 private:
  double gamma_a_;
  double gamma_b_;
};

XStateParams make_xstate(double a, double b, double c, double d, double w_mod, double w_phase);

DensityMatrix4 to_density(const XStateParams& s);

// Reads the X entries of m; throws NotXForm if any other entry has modulus >= tol.
XStateParams from_density(const DensityMatrix4& m, double tol);

// Largest modulus among the eight entries an X state must keep at zero.
double max_non_x_entry(const DensityMatrix4& m);

// Throws if m is not Hermitian (1e-12), unit trace (1e-12) and PSD (-1e-10).
void validate_density(const DensityMatrix4& m);

double normalize_phase(double phase);

}  // namespace mpemba
