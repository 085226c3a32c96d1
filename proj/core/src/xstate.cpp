#include "mpemba/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mpemba/error.hpp"

namespace mpemba {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string describe(const char* what, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << lhs << " vs " << rhs << ")";
  return os.str();
}

}  // namespace

double normalize_phase(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2*pi.
  if (p >= kTwoPi) p = 0.0;
  return p;
}

XStateParams XStateParams::make(double a, double b, double c, double d, double w_mod,
                                double w_phase) {
  return make_general(a, b, c, d, w_mod, w_phase, 0.0, 0.0);
}

XStateParams XStateParams::make_general(double a, double b, double c, double d, double w_mod,
                                        double w_phase, double z_mod, double z_phase) {
  for (double v : {a, b, c, d, w_mod, w_phase, z_mod, z_phase}) {
    if (!std::isfinite(v)) throw Error(ErrorKind::RangeViolation, "non-finite X-state field");
  }
  for (double p : {a, b, c, d}) {
    if (p < -kPositivityTolerance || p > 1.0 + kPositivityTolerance)
      throw Error(ErrorKind::RangeViolation, describe("population outside [0,1]", p, 0.0));
  }
  if (w_mod < 0.0 || z_mod < 0.0)
    throw Error(ErrorKind::RangeViolation, "coherence modulus must be non-negative");

  const double sum = a + b + c + d;
  if (std::abs(sum - 1.0) > kTraceTolerance)
    throw Error(ErrorKind::TraceViolation, describe("a+b+c+d != 1", sum, 1.0));
  if (a * d < w_mod * w_mod - kPositivityTolerance)
    throw Error(ErrorKind::PositivityViolation, describe("a*d < |w|^2", a * d, w_mod * w_mod));
  if (b * c < z_mod * z_mod - kPositivityTolerance)
    throw Error(ErrorKind::PositivityViolation, describe("b*c < |z|^2", b * c, z_mod * z_mod));

  XStateParams s;
  s.a_ = a;
  s.b_ = b;
  s.c_ = c;
  s.d_ = d;
  s.w_mod_ = w_mod;
  s.w_phase_ = normalize_phase(w_phase);
  s.z_mod_ = z_mod;
  s.z_phase_ = normalize_phase(z_phase);
  return s;
}

XStateParams make_xstate(double a, double b, double c, double d, double w_mod, double w_phase) {
  return XStateParams::make(a, b, c, d, w_mod, w_phase);
}

DampingRates::DampingRates(double gamma_a, double gamma_b) : gamma_a_(gamma_a), gamma_b_(gamma_b) {
  if (!(std::isfinite(gamma_a) && gamma_a > 0.0 && std::isfinite(gamma_b) && gamma_b > 0.0))
    throw Error(ErrorKind::DomainError, "damping rates must be finite and strictly positive");
}

double DampingRates::max_rate() const { return std::max(gamma_a_, gamma_b_); }
double DampingRates::min_rate() const { return std::min(gamma_a_, gamma_b_); }

DensityMatrix4 to_density(const XStateParams& s) {
  DensityMatrix4 m;
  m(0, 0) = s.a();
  m(1, 1) = s.b();
  m(2, 2) = s.c();
  m(3, 3) = s.d();
  const Complex w = std::polar(s.w_mod(), s.w_phase());
  const Complex z = std::polar(s.z_mod(), s.z_phase());
  m(0, 3) = w;
  m(3, 0) = std::conj(w);
  m(1, 2) = z;
  m(2, 1) = std::conj(z);
  return m;
}

double max_non_x_entry(const DensityMatrix4& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

XStateParams from_density(const DensityMatrix4& m, double tol) {
  const double worst = max_non_x_entry(m);
  if (worst >= tol) throw Error(ErrorKind::NotXForm, describe("non-X entry exceeds tolerance", worst, tol));
  const Complex w = m(0, 3);
  const Complex z = m(1, 2);
  return XStateParams::make_general(m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                                    m(3, 3).real(), std::abs(w), std::arg(w), std::abs(z),
                                    std::arg(z));
}

void validate_density(const DensityMatrix4& m) {
  const double herm = hermiticity_error(m);
  if (herm > 1e-12) throw Error(ErrorKind::RangeViolation, describe("matrix is not Hermitian", herm, 1e-12));
  const Complex tr = trace(m);
  if (std::abs(tr - 1.0) > kTraceTolerance)
    throw Error(ErrorKind::TraceViolation, describe("trace != 1", tr.real(), 1.0));
  const double min_eig = hermitian_eigen(m).values[0];
  if (min_eig < -1e-10)
    throw Error(ErrorKind::PositivityViolation, describe("negative eigenvalue", min_eig, -1e-10));
}

}  // namespace mpemba
