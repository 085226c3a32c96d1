#pragma once

#include <cstddef>
#include <vector>

#include "mpemba/xstate.hpp"

namespace mpemba {

// e^{-gamma t}; DomainError for t < 0 or gamma <= 0.
double damping_factor(double gamma, double t);

// Closed-form evolution under independent amplitude damping. Requires z = 0
// and t >= 0. The w phase is carried unchanged and a = 1 - b - c - d.
XStateParams propagate(const XStateParams& s0, const DampingRates& rates, double t);

class TimeGrid {
 public:
  // Uniform grid; the last point is exactly t_end.
  TimeGrid(double t_start, double t_end, std::size_t n_points);

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  std::size_t size() const { return n_points_; }
  double step() const { return (t_end_ - t_start_) / static_cast<double>(n_points_ - 1); }
  double at(std::size_t i) const;

 private:
  double t_start_;
  double t_end_;
  std::size_t n_points_;
};

struct Trajectory {
  TimeGrid grid;
  std::vector<XStateParams> states;
  std::vector<double> concurrences;
};

Trajectory evolve_trajectory(const XStateParams& s0, const DampingRates& rates, const TimeGrid& grid);

}  // namespace mpemba
