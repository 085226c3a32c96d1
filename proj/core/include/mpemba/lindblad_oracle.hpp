#pragma once

#include "mpemba/xstate.hpp"

namespace mpemba {

// Largest admissible dt * max(gamma_a, gamma_b) for the fixed-step integrator.
inline constexpr double kMaxStepRateProduct = 0.05;
inline constexpr double kDefaultOracleStep = 1e-4;

struct IntegratorConfig {
  double dt = kDefaultOracleStep;
  double t_final = 0.0;
};

// Sum over qubits of gamma_i (L rho L^+ - {L^+ L, rho}/2) with L = |0><1| on
// qubit i, built from dense 4x4 products.
DensityMatrix4 lindblad_rhs(const DensityMatrix4& rho, const DampingRates& rates);

// One classical RK4 step of size dt.
DensityMatrix4 rk4_step(const DensityMatrix4& rho, const DampingRates& rates, double dt);

// Integrates from 0 to cfg.t_final in steps of cfg.dt; a trailing partial
// step lands exactly on t_final. Throws StepTooLarge when
// dt * max rate > kMaxStepRateProduct.
DensityMatrix4 integrate_rk4(const DensityMatrix4& rho0, const DampingRates& rates,
                             const IntegratorConfig& cfg);

// Spin-flip concurrence max(0, l1 - l2 - l3 - l4), l_k the decreasing square
// roots of the eigenvalues of rho * (Y rho^* Y), Y = sigma_y (x) sigma_y.
// Exact X-form inputs use the two 2x2 blocks of that product; anything else
// goes through wootters_concurrence_general.
double wootters_concurrence(const DensityMatrix4& rho);

// Same quantity via the Hermitian matrix sqrt(rho) rho~ sqrt(rho), which is
// similar to rho * rho~, diagonalized by Jacobi rotations.
double wootters_concurrence_general(const DensityMatrix4& rho);

// Y rho^* Y.
DensityMatrix4 spin_flip(const DensityMatrix4& rho);

}  // namespace mpemba
