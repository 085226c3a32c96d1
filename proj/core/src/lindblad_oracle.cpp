#include "mpemba/lindblad_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "mpemba/error.hpp"

namespace mpemba {

namespace {

// Lowering operator |0><1| acting on qubit A (high bit) or B (low bit).
Matrix4 lowering(bool on_a) {
  Matrix4 m;
  for (std::size_t other = 0; other < 2; ++other) {
    const std::size_t from = on_a ? (2 + other) : (2 * other + 1);
    const std::size_t to = on_a ? other : (2 * other);
    m(to, from) = 1.0;
  }
  return m;
}

struct Dissipator {
  Matrix4 jump;
  Matrix4 jump_dag;
  Matrix4 number;  // jump^+ jump
};

const std::array<Dissipator, 2>& dissipators() {
  static const std::array<Dissipator, 2> ops = [] {
    std::array<Dissipator, 2> out;
    for (int q = 0; q < 2; ++q) {
      const Matrix4 l = lowering(q == 0);
      const Matrix4 ld = adjoint(l);
      out[q] = Dissipator{l, ld, ld * l};
    }
    return out;
  }();
  return ops;
}

double sqrt_clamped(double x) { return std::sqrt(std::max(x, 0.0)); }

double combine(std::array<double, 4> roots) {
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double c = roots[0] - roots[1] - roots[2] - roots[3];
  return std::clamp(c, 0.0, 1.0);
}

// Eigenvalues of a 2x2 block with real spectrum; uses (p-s)^2 + 4qr for the
// discriminant to avoid cancellation when p == s.
std::array<double, 2> block_eigenvalues(Complex p, Complex q, Complex r, Complex s) {
  const Complex disc = std::sqrt((p - s) * (p - s) + 4.0 * q * r);
  const Complex half_trace = 0.5 * (p + s);
  return {(half_trace + 0.5 * disc).real(), (half_trace - 0.5 * disc).real()};
}

}  // namespace

DensityMatrix4 lindblad_rhs(const DensityMatrix4& rho, const DampingRates& rates) {
  const std::array<double, 2> gammas{rates.gamma_a(), rates.gamma_b()};
  DensityMatrix4 out;
  for (std::size_t q = 0; q < 2; ++q) {
    const Dissipator& op = dissipators()[q];
    Matrix4 term = op.jump * rho * op.jump_dag;
    term -= Complex(0.5) * (op.number * rho + rho * op.number);
    out += Complex(gammas[q]) * term;
  }
  return out;
}

DensityMatrix4 rk4_step(const DensityMatrix4& rho, const DampingRates& rates, double dt) {
  const Complex h(dt);
  const Matrix4 k1 = lindblad_rhs(rho, rates);
  const Matrix4 k2 = lindblad_rhs(rho + Complex(0.5 * dt) * k1, rates);
  const Matrix4 k3 = lindblad_rhs(rho + Complex(0.5 * dt) * k2, rates);
  const Matrix4 k4 = lindblad_rhs(rho + h * k3, rates);
  Matrix4 incr = k1;
  incr += Complex(2.0) * k2;
  incr += Complex(2.0) * k3;
  incr += k4;
  return rho + Complex(dt / 6.0) * incr;
}

DensityMatrix4 integrate_rk4(const DensityMatrix4& rho0, const DampingRates& rates,
                             const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
    throw Error(ErrorKind::DomainError, "integrator step must be positive");
  if (!(cfg.t_final >= 0.0) || !std::isfinite(cfg.t_final))
    throw Error(ErrorKind::DomainError, "integration horizon must be non-negative");
  if (cfg.dt * rates.max_rate() > kMaxStepRateProduct)
    throw Error(ErrorKind::StepTooLarge, "dt * max(gamma) exceeds 0.05");

  const auto full_steps = static_cast<long long>(std::floor(cfg.t_final / cfg.dt));
  DensityMatrix4 rho = rho0;
  for (long long n = 0; n < full_steps; ++n) rho = rk4_step(rho, rates, cfg.dt);
  const double remainder = cfg.t_final - static_cast<double>(full_steps) * cfg.dt;
  if (remainder > 1e-12 * cfg.dt) rho = rk4_step(rho, rates, remainder);
  return rho;
}

DensityMatrix4 spin_flip(const DensityMatrix4& rho) {
  // sigma_y (x) sigma_y has entries -1 on |00><11|, |11><00| and +1 on |01><10|, |10><01|.
  static const Matrix4 yy = [] {
    Matrix4 m;
    m(0, 3) = -1.0;
    m(3, 0) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    return m;
  }();
  return yy * conjugate(rho) * yy;
}

double wootters_concurrence(const DensityMatrix4& rho) {
  if (max_non_x_entry(rho) != 0.0) return wootters_concurrence_general(rho);
  const Matrix4 product = rho * spin_flip(rho);
  const auto outer = block_eigenvalues(product(0, 0), product(0, 3), product(3, 0), product(3, 3));
  const auto inner = block_eigenvalues(product(1, 1), product(1, 2), product(2, 1), product(2, 2));
  return combine({sqrt_clamped(outer[0]), sqrt_clamped(outer[1]), sqrt_clamped(inner[0]),
                  sqrt_clamped(inner[1])});
}

double wootters_concurrence_general(const DensityMatrix4& rho) {
  const Matrix4 root = psd_sqrt(rho);
  const Matrix4 r = root * spin_flip(rho) * root;
  const HermitianEigen eig = hermitian_eigen(r);
  return combine({sqrt_clamped(eig.values[0]), sqrt_clamped(eig.values[1]),
                  sqrt_clamped(eig.values[2]), sqrt_clamped(eig.values[3])});
}

}  // namespace mpemba
