#include <doctest.h>

#include <cmath>

#include "mpemba/entanglement.hpp"
#include "mpemba/error.hpp"
#include "mpemba/lindblad_oracle.hpp"
#include "mpemba/propagator.hpp"
#include "test_support.hpp"

using namespace mpemba;

TEST_CASE("damping_factor") {
  CHECK(damping_factor(1.0, 0.0) == 1.0);
  CHECK(damping_factor(1.0, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(damping_factor(0.1, 10.0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
  CHECK_THROWS_AS(damping_factor(1.0, -1e-3), Error);
  CHECK_THROWS_AS(damping_factor(0.0, 1.0), Error);
}

TEST_CASE("symmetric propagation to t = ln 2") {
  const XStateParams s = propagate(make_xstate(0.6, 0, 0, 0.4, 0.25, 0), DampingRates::symmetric(1),
                                   std::log(2.0));
  CHECK(s.a() == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(s.b() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(s.c() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(s.d() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(s.w_mod() == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(s.w_phase() == 0.0);

  const DensityMatrix4 rk4 = integrate_rk4(to_density(make_xstate(0.6, 0, 0, 0.4, 0.25, 0)),
                                           DampingRates::symmetric(1), {1e-4, std::log(2.0)});
  CHECK(max_abs_diff(rk4, to_density(s)) < 1e-6);
}

TEST_CASE("t = 0 is the identity and large t reaches the ground state") {
  testing::Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const XStateParams s0 = testing::random_state(rng);
    const DampingRates r(rng.uniform(0.05, 20), rng.uniform(0.05, 20));
    CHECK(propagate(s0, r, 0.0) == s0);
  }
  const XStateParams late = propagate(make_xstate(0.2, 0, 0, 0.8, 0.35, 0), DampingRates::symmetric(1), 50);
  CHECK(std::abs(late.a() - 1.0) <= 1e-15);
  CHECK(late.b() <= 1e-15);
  CHECK(late.c() <= 1e-15);
  CHECK(late.d() <= 1e-15);
  CHECK(late.w_mod() <= 1e-15);
}

TEST_CASE("propagate rejects negative time and nonzero z") {
  const XStateParams s = make_xstate(0.6, 0, 0, 0.4, 0.25, 0);
  CHECK_THROWS_AS(propagate(s, DampingRates::symmetric(1), -0.1), Error);
  const XStateParams z = XStateParams::make_general(0.4, 0.2, 0.2, 0.2, 0.1, 0, 0.1, 0);
  CHECK_THROWS_AS(propagate(z, DampingRates::symmetric(1), 0.1), Error);
}

// The |10> population relaxes through qubit A's channel. Starting from
// c(0) = 1 with very different rates, the RK4 integration of the master
// equation decides between exp(-gamma_a t) and exp(-gamma_b t).
TEST_CASE("c(0) relaxation coefficient is exp(-gamma_a t), confirmed by RK4") {
  const DampingRates rates(0.3, 4.0);
  const double t = 0.7;
  const DensityMatrix4 rho = integrate_rk4(to_density(make_xstate(0, 0, 1, 0, 0, 0)), rates, {1e-4, t});
  CHECK(rho(2, 2).real() == doctest::Approx(std::exp(-0.3 * t)).epsilon(1e-9));
  CHECK(std::abs(rho(2, 2).real() - std::exp(-4.0 * t)) > 0.7);

  const XStateParams s = propagate(make_xstate(0, 0, 1, 0, 0, 0), rates, t);
  CHECK(s.c() == doctest::Approx(rho(2, 2).real()).epsilon(1e-9));
  // The mirror statement for b(0) and gamma_b.
  const DensityMatrix4 rho_b = integrate_rk4(to_density(make_xstate(0, 1, 0, 0, 0, 0)), rates, {1e-4, t});
  CHECK(rho_b(1, 1).real() == doctest::Approx(std::exp(-4.0 * t)).epsilon(1e-9));
}

// |11> reaches |01> when A decays and B survives, so the feed into b(t)
// carries gamma_b (1 - gamma_a), and the feed into c(t) the mirror product.
TEST_CASE("d(0) feeds b and c through the surviving qubit, confirmed by RK4") {
  const DampingRates rates(0.5, 0.3);
  const double t = 2.0;
  const double ga = std::exp(-1.0);
  const double gb = std::exp(-0.6);
  const DensityMatrix4 rho = integrate_rk4(to_density(make_xstate(0, 0, 0, 1, 0, 0)), rates, {1e-4, t});
  CHECK(rho(1, 1).real() == doctest::Approx(gb * (1 - ga)).epsilon(1e-9));
  CHECK(rho(2, 2).real() == doctest::Approx(ga * (1 - gb)).epsilon(1e-9));
  // The swapped assignment differs by far more than the integration error.
  CHECK(std::abs(rho(1, 1).real() - ga * (1 - gb)) > 0.05);

  const XStateParams s = propagate(make_xstate(0, 0, 0, 1, 0, 0), rates, t);
  CHECK(s.b() == doctest::Approx(rho(1, 1).real()).epsilon(1e-9));
  CHECK(s.c() == doctest::Approx(rho(2, 2).real()).epsilon(1e-9));
}

TEST_CASE("closed form matches the RK4 oracle on random states") {
  testing::Rng rng(2024);
  for (int k = 0; k < 40; ++k) {
    const XStateParams s0 = testing::random_state(rng);
    const DampingRates r(rng.uniform(0.05, 20), rng.uniform(0.05, 20));
    DensityMatrix4 rho = to_density(s0);
    double t_prev = 0.0;
    for (double t : {0.1, 0.5, 1.0}) {
      rho = integrate_rk4(rho, r, {1e-4, t - t_prev});
      t_prev = t;
      CHECK(max_abs_diff(to_density(propagate(s0, r, t)), rho) < 1e-6);
      CHECK(max_non_x_entry(rho) < 1e-9);
    }
  }
}

TEST_CASE("semigroup, trace and positivity") {
  testing::Rng rng(99);
  for (int k = 0; k < 300; ++k) {
    const XStateParams s0 = testing::random_state(rng);
    const DampingRates r(rng.uniform(0.05, 20), rng.uniform(0.05, 20));
    const double t1 = rng.uniform(0, 3);
    const double t2 = rng.uniform(0, 3);
    const XStateParams two_step = propagate(propagate(s0, r, t1), r, t2);
    const XStateParams one_step = propagate(s0, r, t1 + t2);
    CHECK(max_abs_diff(to_density(two_step), to_density(one_step)) < 1e-12);
    CHECK(std::abs(one_step.a() + one_step.b() + one_step.c() + one_step.d() - 1.0) < 1e-15);
    CHECK(one_step.a() * one_step.d() >= one_step.w_mod() * one_step.w_mod() - 1e-12);
    CHECK(one_step.w_phase() == s0.w_phase());
  }
}

TEST_CASE("symmetric reduction to the single-rate solution") {
  testing::Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const InitialParams p = testing::random_params(rng);
    const double gamma = rng.uniform(0.05, 20);
    const double t = rng.uniform(0, 4);
    const double g = std::exp(-gamma * t);
    const double c1 = p.d0();
    const XStateParams s = propagate(p.to_xstate(), DampingRates::symmetric(gamma), t);
    CHECK(std::abs(s.a() - (1 + p.d0() * g * (g - 2))) < 1e-14);
    CHECK(std::abs(s.b() - (c1 * g - p.d0() * g * g)) < 1e-14);
    CHECK(std::abs(s.c() - (c1 * g - p.d0() * g * g)) < 1e-14);
    CHECK(std::abs(s.d() - p.d0() * g * g) < 1e-14);
    CHECK(std::abs(s.w_mod() - p.w0() * g) < 1e-14);
  }
}

TEST_CASE("time grid") {
  const TimeGrid grid(0, 3, 301);
  CHECK(grid.at(0) == 0.0);
  CHECK(grid.at(300) == 3.0);
  CHECK(grid.at(100) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(TimeGrid(0, 1, 1), Error);
  CHECK_THROWS_AS(TimeGrid(1, 1, 5), Error);
  CHECK_THROWS_AS(TimeGrid(-1, 1, 5), Error);
}

TEST_CASE("evolve_trajectory") {
  const XStateParams s0 = make_xstate(0.6, 0, 0, 0.4, 0.25, 0);
  const DampingRates r(0.5, 2.0);
  const Trajectory two = evolve_trajectory(s0, r, TimeGrid(0, 1.5, 2));
  CHECK(two.states.front() == propagate(s0, r, 0));
  CHECK(two.states.back() == propagate(s0, r, 1.5));

  const Trajectory pink = evolve_trajectory(make_xstate(0.6, 0, 0, 0.4, 0.35, 0), DampingRates::symmetric(1),
                                            TimeGrid(0, 5, 501));
  REQUIRE(pink.concurrences.size() == 501);
  CHECK(pink.concurrences.front() == doctest::Approx(0.7));
  std::size_t first_zero = 0;
  for (std::size_t i = 1; i < pink.concurrences.size(); ++i) {
    CHECK(pink.concurrences[i] <= pink.concurrences[i - 1]);
    if (first_zero == 0 && pink.concurrences[i] == 0.0) first_zero = i;
  }
  // Sudden death at ln 8 = 2.0794...: zero first appears at t = 2.08.
  CHECK(first_zero == 208);

  const Trajectory ground = evolve_trajectory(make_xstate(1, 0, 0, 0, 0, 0), r, TimeGrid(0, 4, 50));
  for (double c : ground.concurrences) CHECK(c == 0.0);
}
