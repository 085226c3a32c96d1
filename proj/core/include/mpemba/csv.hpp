#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpemba/propagator.hpp"
#include "mpemba/sweeps.hpp"
#include "mpemba/timescales.hpp"

namespace mpemba::csv {

// 17 significant digits, locale independent.
std::string format_number(double x);
std::string format_optional(const std::optional<double>& x);

std::string join(const std::vector<std::string>& fields);

// t,a,b,c,d,w_mod,concurrence
std::string trajectory(const Trajectory& traj);

// kind,time,residual
std::string esd(const TimescaleResult& result);

// kind,time,concurrence_at_cross,residual
std::string cross(const TimescaleResult& result, std::optional<double> concurrence_at_cross);

// w2,d2,class,tau_cross,c_cross
std::string phase_diagram(const std::vector<PhaseCell>& cells);

// ratio,tau_cross,c_cross,tau_esd1,tau_esd2
std::string ratio_sweep(const std::vector<RatioSweepRow>& rows);

// Splits LF-terminated CSV text into rows of fields (no quoting support).
std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace mpemba::csv
