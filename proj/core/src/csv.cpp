#include "mpemba/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace mpemba::csv {

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), res.ptr);
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string{};
}

std::string join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) line += ',';
    line += fields[k];
  }
  line += '\n';
  return line;
}

std::string trajectory(const Trajectory& traj) {
  std::string out = "t,a,b,c,d,w_mod,concurrence\n";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const XStateParams& s = traj.states[i];
    out += join({format_number(traj.grid.at(i)), format_number(s.a()), format_number(s.b()),
                 format_number(s.c()), format_number(s.d()), format_number(s.w_mod()),
                 format_number(traj.concurrences[i])});
  }
  return out;
}

std::string esd(const TimescaleResult& result) {
  std::string out = "kind,time,residual\n";
  if (result.kind == TimescaleResult::Kind::Immediate) {
    out += join({to_string(result.kind), format_number(0.0), format_number(0.0)});
  } else if (result.is_finite()) {
    out += join({to_string(result.kind), format_number(result.time), format_number(result.residual)});
  } else {
    out += join({to_string(result.kind), "", ""});
  }
  return out;
}

std::string cross(const TimescaleResult& result, std::optional<double> concurrence_at_cross) {
  std::string out = "kind,time,concurrence_at_cross,residual\n";
  if (result.is_finite()) {
    out += join({to_string(result.kind), format_number(result.time),
                 format_optional(concurrence_at_cross), format_number(result.residual)});
  } else {
    out += join({to_string(result.kind), "", "", ""});
  }
  return out;
}

std::string phase_diagram(const std::vector<PhaseCell>& cells) {
  std::string out = "w2,d2,class,tau_cross,c_cross\n";
  for (const PhaseCell& cell : cells) {
    out += join({format_number(cell.w2), format_number(cell.d2), std::string(to_string(cell.cls)),
                 format_optional(cell.tau_cross), format_optional(cell.c_cross)});
  }
  return out;
}

std::string ratio_sweep(const std::vector<RatioSweepRow>& rows) {
  std::string out = "ratio,tau_cross,c_cross,tau_esd1,tau_esd2\n";
  for (const RatioSweepRow& row : rows) {
    out += join({format_number(row.ratio), format_number(row.tau_cross), format_number(row.c_cross),
                 format_optional(row.tau_esd1), format_optional(row.tau_esd2)});
  }
  return out;
}

std::vector<std::vector<std::string>> parse(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
    pos = eol + 1;
  }
  return rows;
}

}  // namespace mpemba::csv
