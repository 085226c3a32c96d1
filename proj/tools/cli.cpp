#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "mpemba/csv.hpp"
#include "mpemba/entanglement.hpp"
#include "mpemba/error.hpp"
#include "mpemba/propagator.hpp"
#include "mpemba/sweeps.hpp"
#include "mpemba/timescales.hpp"
#include "mpemba/validation.hpp"

namespace mpemba::cli {

namespace {

struct Options {
  double d0 = 0.4;
  double w0 = 0.25;
  double ref_d0 = 0.25;
  double ref_w0 = 0.4;
  double d1 = 0.4;
  double w1 = 0.25;
  double d2 = 0.8;
  double w2 = 0.35;
  double gamma_a = 1.0;
  double gamma_b = 1.0;
  double t_max = 3.0;
  std::size_t steps = 301;
  std::size_t grid_n = 201;
  double w_min = 0.0;
  double w_max = 0.5;
  double d_min = 0.0;
  double d_max = 1.0;
  double ratio_min = 0.1;
  double ratio_max = 10.0;
  std::size_t n_ratios = 30;
  bool log_spacing = false;
  std::uint64_t seed = 42;
  std::size_t cases = 50;
  std::string output = "-";
};

// Raised for input problems detected by the CLI itself.
struct InvalidInput {
  std::string message;
};

InitialParams physical_params(double d0, double w0, const char* label) {
  if (!is_physical(d0, w0)) {
    throw InvalidInput{std::string(label) + " violates physicality: require 0 <= d0 <= 1, w0 >= 0 "
                                            "and w0^2 <= d0*(1-d0)"};
  }
  return InitialParams(d0, w0);
}

DampingRates rates_from(const Options& o) {
  if (!(o.gamma_a > 0.0 && o.gamma_b > 0.0))
    throw InvalidInput{"damping rates must be strictly positive"};
  return DampingRates(o.gamma_a, o.gamma_b);
}

bool write_output(const std::string& path, const std::string& body, std::ostream& out,
                  std::ostream& err) {
  if (path.empty() || path == "-") {
    out << body;
    return true;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file " << path << "\n";
    return false;
  }
  file << body;
  return static_cast<bool>(file);
}

std::string run_trajectory(const Options& o) {
  const InitialParams p = physical_params(o.d0, o.w0, "--d0/--w0");
  const DampingRates rates = rates_from(o);
  if (o.steps < 2) throw InvalidInput{"--steps must be at least 2"};
  if (!(o.t_max > 0.0)) throw InvalidInput{"--t-max must be positive"};
  return csv::trajectory(evolve_trajectory(p.to_xstate(), rates, TimeGrid(0.0, o.t_max, o.steps)));
}

std::string run_esd(const Options& o) {
  const InitialParams p = physical_params(o.d0, o.w0, "--d0/--w0");
  return csv::esd(esd_time(p, rates_from(o)));
}

std::string run_cross(const Options& o) {
  const InitialParams p1 = physical_params(o.d1, o.w1, "--d1/--w1");
  const InitialParams p2 = physical_params(o.d2, o.w2, "--d2/--w2");
  const DampingRates rates = rates_from(o);
  const TimescaleResult cross = crossing_time(p1, p2, rates);
  std::optional<double> c_cross;
  if (cross.is_finite()) c_cross = concurrence_closed_form(p1, rates, cross.time);
  return csv::cross(cross, c_cross);
}

std::string run_phase_diagram(const Options& o) {
  const InitialParams ref = physical_params(o.ref_d0, o.ref_w0, "reference --d0/--w0");
  const DampingRates rates = rates_from(o);
  const GridSpec grid{o.w_min, o.w_max, o.d_min, o.d_max, o.grid_n, o.grid_n};
  try {
    grid.validate();
  } catch (const Error& e) {
    throw InvalidInput{e.what()};
  }
  return csv::phase_diagram(phase_diagram(ref, grid, rates, {}, sweep_threads_from_env()));
}

std::string run_ratio_sweep(const Options& o) {
  const InitialParams p1 = physical_params(o.d1, o.w1, "--d1/--w1");
  const InitialParams p2 = physical_params(o.d2, o.w2, "--d2/--w2");
  if (!(o.gamma_a > 0.0)) throw InvalidInput{"--gamma-a must be strictly positive"};
  if (!in_mpemba_region(p1, p2)) throw InvalidInput{"pair lies outside the Mpemba region (no crossing)"};
  if (!(o.ratio_min > 0.0 && o.ratio_max > o.ratio_min) && !(o.n_ratios == 1 && o.ratio_min > 0.0))
    throw InvalidInput{"require 0 < --ratio-min < --ratio-max"};
  const std::vector<double> ratios = ratio_grid(o.ratio_min, o.ratio_max, o.n_ratios, o.log_spacing);
  return csv::ratio_sweep(ratio_sweep(p1, p2, o.gamma_a, ratios, {}, sweep_threads_from_env()));
}

void add_rates(CLI::App* sub, Options& o) {
  sub->add_option("--gamma-a", o.gamma_a, "decay rate of qubit A");
  sub->add_option("--gamma-b", o.gamma_b, "decay rate of qubit B");
}

void add_pair(CLI::App* sub, Options& o) {
  sub->add_option("--d1", o.d1, "first state |11> population");
  sub->add_option("--w1", o.w1, "first state coherence modulus");
  sub->add_option("--d2", o.d2, "second state |11> population");
  sub->add_option("--w2", o.w2, "second state coherence modulus");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  Options o;
  CLI::App app{"Two-qubit entanglement dynamics under local amplitude damping", "mpemba-qdyn"};
  app.require_subcommand(1);

  auto* trajectory = app.add_subcommand("trajectory", "concurrence and populations on a time grid");
  trajectory->add_option("--d0", o.d0, "initial |11> population");
  trajectory->add_option("--w0", o.w0, "initial coherence modulus");
  add_rates(trajectory, o);
  trajectory->add_option("--t-max", o.t_max, "final time");
  trajectory->add_option("--steps", o.steps, "number of grid points");

  auto* esd = app.add_subcommand("esd", "entanglement sudden death time");
  esd->add_option("--d0", o.d0, "initial |11> population");
  esd->add_option("--w0", o.w0, "initial coherence modulus");
  add_rates(esd, o);

  auto* cross = app.add_subcommand("cross", "crossing time of two concurrence trajectories");
  add_pair(cross, o);
  add_rates(cross, o);

  auto* phase = app.add_subcommand("phase-diagram", "classify a (w2, d2) grid against a reference");
  phase->add_option("--d0", o.ref_d0, "reference |11> population");
  phase->add_option("--w0", o.ref_w0, "reference coherence modulus");
  add_rates(phase, o);
  phase->add_option("--grid-n", o.grid_n, "points per axis");
  phase->add_option("--w-min", o.w_min);
  phase->add_option("--w-max", o.w_max);
  phase->add_option("--d-min", o.d_min);
  phase->add_option("--d-max", o.d_max);

  auto* sweep = app.add_subcommand("ratio-sweep", "crossing and ESD times versus gamma_b/gamma_a");
  add_pair(sweep, o);
  sweep->add_option("--gamma-a", o.gamma_a, "decay rate of qubit A");
  sweep->add_option("--ratio-min", o.ratio_min);
  sweep->add_option("--ratio-max", o.ratio_max);
  sweep->add_option("--n-ratios", o.n_ratios);
  sweep->add_flag("--log-spacing", o.log_spacing, "log-spaced ratios");

  auto* validate = app.add_subcommand("validate", "audit closed forms against the RK4 oracle");
  validate->add_option("--seed", o.seed);
  validate->add_option("--cases", o.cases);

  for (auto* sub : {trajectory, esd, cross, phase, sweep, validate})
    sub->add_option("--output", o.output, "output CSV path, '-' for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    std::string body;
    if (*trajectory) {
      body = run_trajectory(o);
    } else if (*esd) {
      body = run_esd(o);
    } else if (*cross) {
      body = run_cross(o);
    } else if (*phase) {
      body = run_phase_diagram(o);
    } else if (*sweep) {
      body = run_ratio_sweep(o);
    } else if (*validate) {
      const ValidationReport report = run_validation(o.seed, o.cases, hooks.propagator);
      if (!write_output(o.output, validation_csv(report), out, err)) return kInvalidInput;
      if (const auto failure = report.first_failure()) {
        const ValidationCase& c = report.cases[*failure];
        err << "validation failed at case " << c.index << ": propagator_error=" << c.propagator_error
            << " concurrence_error=" << c.concurrence_error << " solver_error=" << c.solver_error
            << "\n";
        return kNumericalFailure;
      }
      return kSuccess;
    }
    return write_output(o.output, body, out, err) ? kSuccess : kInvalidInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.message << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::NoConvergence:
      case ErrorKind::EigenFailure:
      case ErrorKind::StepTooLarge:
        return kNumericalFailure;
      default:
        return kInvalidInput;
    }
  }
}

}  // namespace mpemba::cli
