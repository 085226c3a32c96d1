#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mpemba/entanglement.hpp"
#include "mpemba/timescales.hpp"

namespace mpemba {

enum class PhaseClass { Unphysical, NoEsd, EsdNoMpemba, Mpemba };

// UNPHYSICAL, NO_ESD, ESD_NO_MPEMBA, MPEMBA.
std::string_view to_string(PhaseClass cls);

struct PhaseCell {
  double w2 = 0.0;
  double d2 = 0.0;
  PhaseClass cls = PhaseClass::Unphysical;
  std::optional<double> tau_cross;  // present iff Mpemba
  std::optional<double> c_cross;    // present iff Mpemba

  friend bool operator==(const PhaseCell&, const PhaseCell&) = default;
};

struct GridSpec {
  double w_min = 0.0;
  double w_max = 0.5;
  double d_min = 0.0;
  double d_max = 1.0;
  std::size_t n_w = 201;
  std::size_t n_d = 201;

  // Throws DomainError unless ranges lie in [0,1], min <= max and n >= 2.
  void validate() const;
  double w_at(std::size_t i) const;
  double d_at(std::size_t j) const;
};

struct RatioSweepRow {
  double ratio = 0.0;
  double tau_cross = 0.0;
  double c_cross = 0.0;
  std::optional<double> tau_esd1;
  std::optional<double> tau_esd2;

  friend bool operator==(const RatioSweepRow&, const RatioSweepRow&) = default;
};

// Worker count for sweeps: MPEMBA_QDYN_THREADS if set and positive,
// otherwise std::thread::hardware_concurrency().
std::size_t sweep_threads_from_env();

PhaseCell classify_cell(double w2, double d2, const InitialParams& ref, const DampingRates& rates,
                        const SolverConfig& cfg = {});

// Row-major over (w, d): cell k = i * n_d + j has w = w_at(i), d = d_at(j).
// Output is independent of the thread count.
std::vector<PhaseCell> phase_diagram(const InitialParams& ref, const GridSpec& grid,
                                     const DampingRates& rates, const SolverConfig& cfg = {},
                                     std::size_t threads = 1);

// True when crossing_time(p1, p2, .) is a positive finite time. The answer
// does not depend on the damping rates.
bool in_mpemba_region(const InitialParams& p1, const InitialParams& p2);

// One row per ratio with rates (gamma_a, ratio * gamma_a). Throws NoCrossing
// if the pair never crosses, DomainError for non-positive or unsorted ratios.
std::vector<RatioSweepRow> ratio_sweep(const InitialParams& p1, const InitialParams& p2,
                                       double gamma_a, const std::vector<double>& ratios,
                                       const SolverConfig& cfg = {}, std::size_t threads = 1);

// n ratios from lo to hi inclusive, linear or logarithmic spacing.
std::vector<double> ratio_grid(double lo, double hi, std::size_t n, bool log_spacing);

}  // namespace mpemba
