#include "mpemba/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "mpemba/error.hpp"

namespace mpemba {

std::string_view to_string(PhaseClass cls) {
  switch (cls) {
    case PhaseClass::Unphysical: return "UNPHYSICAL";
    case PhaseClass::NoEsd: return "NO_ESD";
    case PhaseClass::EsdNoMpemba: return "ESD_NO_MPEMBA";
    case PhaseClass::Mpemba: return "MPEMBA";
  }
  return "UNKNOWN";
}

void GridSpec::validate() const {
  const auto in_unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!(in_unit(w_min) && in_unit(w_max) && in_unit(d_min) && in_unit(d_max)))
    throw Error(ErrorKind::DomainError, "grid bounds must lie in [0, 1]");
  if (w_min > w_max || d_min > d_max) throw Error(ErrorKind::DomainError, "grid bounds are reversed");
  if (n_w < 2 || n_d < 2) throw Error(ErrorKind::DomainError, "grid needs at least 2 points per axis");
}

// The last index returns the bound itself so grids hit their edges exactly.
double GridSpec::w_at(std::size_t i) const {
  if (i + 1 == n_w) return w_max;
  return w_min + (w_max - w_min) * static_cast<double>(i) / static_cast<double>(n_w - 1);
}

double GridSpec::d_at(std::size_t j) const {
  if (j + 1 == n_d) return d_max;
  return d_min + (d_max - d_min) * static_cast<double>(j) / static_cast<double>(n_d - 1);
}

std::size_t sweep_threads_from_env() {
  if (const char* env = std::getenv("MPEMBA_QDYN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs body(k) for k in [0, n) on up to `threads` workers with static
// contiguous chunks; rethrows the first captured exception.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body body) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t end = std::min(n, (t + 1) * chunk);
        for (std::size_t k = t * chunk; k < end; ++k) body(k);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

PhaseCell classify_cell(double w2, double d2, const InitialParams& ref, const DampingRates& rates,
                        const SolverConfig& cfg) {
  PhaseCell cell{w2, d2, PhaseClass::Unphysical, std::nullopt, std::nullopt};
  if (!is_physical(d2, w2)) return cell;
  if (w2 >= d2) {
    cell.cls = PhaseClass::NoEsd;
    return cell;
  }
  const InitialParams other(d2, w2);
  const TimescaleResult cross = crossing_time(ref, other, rates, cfg);
  if (cross.is_finite() && cross.time > 0.0) {
    cell.cls = PhaseClass::Mpemba;
    cell.tau_cross = cross.time;
    cell.c_cross = concurrence_closed_form(ref, rates, cross.time);
    return cell;
  }
  cell.cls = PhaseClass::EsdNoMpemba;
  return cell;
}

std::vector<PhaseCell> phase_diagram(const InitialParams& ref, const GridSpec& grid,
                                     const DampingRates& rates, const SolverConfig& cfg,
                                     std::size_t threads) {
  grid.validate();
  std::vector<PhaseCell> cells(grid.n_w * grid.n_d);
  parallel_for(cells.size(), threads, [&](std::size_t k) {
    const std::size_t i = k / grid.n_d;
    const std::size_t j = k % grid.n_d;
    cells[k] = classify_cell(grid.w_at(i), grid.d_at(j), ref, rates, cfg);
  });
  return cells;
}

bool in_mpemba_region(const InitialParams& p1, const InitialParams& p2) {
  // Any rate pair gives the same verdict; symmetric rates avoid the solver.
  const TimescaleResult cross = crossing_time(p1, p2, DampingRates::symmetric(1.0));
  return cross.is_finite() && cross.time > 0.0;
}

std::vector<RatioSweepRow> ratio_sweep(const InitialParams& p1, const InitialParams& p2,
                                       double gamma_a, const std::vector<double>& ratios,
                                       const SolverConfig& cfg, std::size_t threads) {
  if (!in_mpemba_region(p1, p2))
    throw Error(ErrorKind::NoCrossing, "pair lies outside the Mpemba region");
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    if (!(ratios[k] > 0.0) || !std::isfinite(ratios[k]))
      throw Error(ErrorKind::DomainError, "ratios must be positive and finite");
    if (k > 0 && !(ratios[k] > ratios[k - 1]))
      throw Error(ErrorKind::DomainError, "ratios must be sorted ascending");
  }
  const auto finite_time = [](const TimescaleResult& r) -> std::optional<double> {
    if (r.is_finite()) return r.time;
    return std::nullopt;
  };

  std::vector<RatioSweepRow> rows(ratios.size());
  parallel_for(rows.size(), threads, [&](std::size_t k) {
    const DampingRates rates(gamma_a, ratios[k] * gamma_a);
    const TimescaleResult cross = crossing_time(p1, p2, rates, cfg);
    rows[k] = RatioSweepRow{ratios[k], cross.time,
                            concurrence_closed_form(p1, rates, cross.time),
                            finite_time(esd_time(p1, rates, cfg)),
                            finite_time(esd_time(p2, rates, cfg))};
  });
  return rows;
}

std::vector<double> ratio_grid(double lo, double hi, std::size_t n, bool log_spacing) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
    throw Error(ErrorKind::DomainError, "ratio range must satisfy 0 < lo <= hi");
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double span = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double frac = static_cast<double>(k) / span;
    out[k] = log_spacing ? std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * frac)
                         : lo + (hi - lo) * frac;
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace mpemba
