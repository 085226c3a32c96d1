#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mpemba/csv.hpp"
#include "mpemba/propagator.hpp"

using namespace mpemba;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

double num(const std::string& s) { return std::stod(s); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mpemba_cli_test_" + name);
}

}  // namespace

TEST_CASE("trajectory: sudden death of the pink state") {
  const Result r = run({"trajectory", "--d0", "0.4", "--w0", "0.35", "--gamma-a", "1", "--gamma-b", "1",
                        "--t-max", "3", "--steps", "301"});
  REQUIRE(r.code == 0);
  const auto rows = csv::parse(r.out);
  REQUIRE(rows.size() == 302);
  CHECK(rows[0] == std::vector<std::string>{"t", "a", "b", "c", "d", "w_mod", "concurrence"});
  CHECK(num(rows[1][6]) == doctest::Approx(0.7));
  std::size_t first_zero = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (num(rows[i][6]) == 0.0) {
      first_zero = i;
      break;
    }
  }
  REQUIRE(first_zero > 0);
  // ln 8 = 2.0794: the first zero row is t = 2.08.
  CHECK(num(rows[first_zero][0]) == doctest::Approx(2.08));
  CHECK(num(rows[first_zero - 1][0]) < std::log(8.0));
}

TEST_CASE("trajectory: zero coherence and the t = 0 row") {
  const Result zero = run({"trajectory", "--d0", "0.4", "--w0", "0"});
  REQUIRE(zero.code == 0);
  const auto rows = csv::parse(zero.out);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][6] == "0");

  const Result red = run({"trajectory", "--d0", "0.8", "--w0", "0.35", "--t-max", "3", "--steps", "301"});
  CHECK(num(csv::parse(red.out)[1][6]) == doctest::Approx(0.7));
}

TEST_CASE("esd and cross rows") {
  const Result esd = run({"esd", "--d0", "0.4", "--w0", "0.25", "--gamma-a", "1", "--gamma-b", "1"});
  REQUIRE(esd.code == 0);
  const auto e = csv::parse(esd.out);
  CHECK(e[0] == std::vector<std::string>{"kind", "time", "residual"});
  CHECK(e[1][0] == "Finite");
  CHECK(num(e[1][1]) == doctest::Approx(0.980829).epsilon(1e-6));

  const Result asym = run({"esd", "--d0", "0.4", "--w0", "0.4"});
  CHECK(asym.out == "kind,time,residual\nAsymptotic,,\n");

  const Result cross = run({"cross", "--d1", "0.4", "--w1", "0.25", "--d2", "0.8", "--w2", "0.35"});
  REQUIRE(cross.code == 0);
  const auto c = csv::parse(cross.out);
  CHECK(c[1][0] == "Finite");
  CHECK(num(c[1][1]) == doctest::Approx(0.287682).epsilon(1e-6));
  CHECK(num(c[1][2]) == doctest::Approx(0.225).epsilon(1e-12));

  const Result none = run({"cross", "--d1", "0.4", "--w1", "0.3", "--d2", "0.6", "--w2", "0.2"});
  CHECK(none.out == "kind,time,concurrence_at_cross,residual\nNoCrossing,,,\n");
}

TEST_CASE("bare subcommands reproduce the figure defaults") {
  const auto cross = csv::parse(run({"cross"}).out);
  CHECK(num(cross[1][1]) == doctest::Approx(-std::log(0.75)));
  const auto sweep = csv::parse(run({"ratio-sweep", "--n-ratios", "3", "--log-spacing"}).out);
  REQUIRE(sweep.size() == 4);
  CHECK(num(sweep[2][0]) == doctest::Approx(1.0));
  CHECK(num(sweep[2][1]) == doctest::Approx(-std::log(0.75)));
}

TEST_CASE("phase diagram: spot checks and invariance") {
  const Result sym = run({"phase-diagram", "--grid-n", "201"});
  REQUIRE(sym.code == 0);
  const auto rows = csv::parse(sym.out);
  REQUIRE(rows.size() == 201 * 201 + 1);
  CHECK(rows[0] == std::vector<std::string>{"w2", "d2", "class", "tau_cross", "c_cross"});
  const auto cell = [&](double w, double d) {
    const std::size_t i = static_cast<std::size_t>(std::lround(w / 0.0025));
    const std::size_t j = static_cast<std::size_t>(std::lround(d / 0.005));
    return rows[1 + i * 201 + j];
  };
  CHECK(cell(0.5, 0.1)[2] == "UNPHYSICAL");
  CHECK(cell(0.45, 0.7)[2] == "MPEMBA");
  CHECK(num(cell(0.45, 0.7)[3]) == doctest::Approx(0.11778303565638346));
  CHECK(cell(0.1, 0.2)[2] == "ESD_NO_MPEMBA");
  CHECK(cell(0.2, 0.1)[2] == "NO_ESD");
  CHECK(cell(0.1, 0.2)[3].empty());

  const Result asym = run({"phase-diagram", "--grid-n", "201", "--gamma-a", "0.1", "--gamma-b", "10"});
  const auto arows = csv::parse(asym.out);
  REQUIRE(arows.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) CHECK(rows[k][2] == arows[k][2]);
}

TEST_CASE("phase diagram over the unphysical corner") {
  const Result r = run({"phase-diagram", "--grid-n", "2", "--w-min", "0.45", "--w-max", "0.5", "--d-min", "0.0",
                        "--d-max", "0.1"});
  REQUIRE(r.code == 0);
  const auto rows = csv::parse(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][2] == "UNPHYSICAL");
}

TEST_CASE("ratio sweep qualitative structure") {
  const Result r = run({"ratio-sweep", "--gamma-a", "1", "--ratio-min", "0.1", "--ratio-max", "10", "--n-ratios",
                        "30", "--log-spacing"});
  REQUIRE(r.code == 0);
  const auto rows = csv::parse(r.out);
  REQUIRE(rows.size() == 31);
  CHECK(rows[0] == std::vector<std::string>{"ratio", "tau_cross", "c_cross", "tau_esd1", "tau_esd2"});
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(num(rows[i][1]) < num(rows[i - 1][1]));
}

TEST_CASE("exit codes and diagnostics") {
  const Result bad = run({"esd", "--d0", "0.1", "--w0", "0.5"});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("w0^2 <= d0*(1-d0)") != std::string::npos);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

  CHECK(run({"trajectory", "--steps", "1"}).code == 1);
  CHECK(run({"esd", "--gamma-a", "0"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"esd", "--d0", "abc"}).code == 1);
  CHECK(run({"ratio-sweep", "--d2", "0.6", "--w2", "0.25"}).code == 1);
  CHECK(run({"phase-diagram", "--d0", "0.1", "--w0", "0.4"}).code == 1);
}

TEST_CASE("invalid input never writes the output file") {
  const auto path = temp_path("invalid.csv");
  std::filesystem::remove(path);
  CHECK(run({"trajectory", "--d0", "0.1", "--w0", "0.5", "--output", path.string()}).code == 1);
  CHECK_FALSE(std::filesystem::exists(path));
}

TEST_CASE("file output is byte-identical across runs") {
  const auto first = temp_path("a.csv");
  const auto second = temp_path("b.csv");
  REQUIRE(run({"ratio-sweep", "--log-spacing", "--output", first.string()}).code == 0);
  REQUIRE(run({"ratio-sweep", "--log-spacing", "--output", second.string()}).code == 0);
  const auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string a = slurp(first);
  CHECK(!a.empty());
  CHECK(a == slurp(second));
  CHECK(a.find('\r') == std::string::npos);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST_CASE("validate") {
  const Result ok = run({"validate", "--seed", "42", "--cases", "5"});
  CHECK(ok.code == 0);
  CHECK(csv::parse(ok.out).size() == 6);

  const Result empty = run({"validate", "--cases", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "case,propagator_error,concurrence_error,solver_error,passed\n");

  cli::Hooks hooks;
  hooks.propagator = [](const XStateParams& s0, const DampingRates& r, double t) {
    return propagate(s0, r, 1.01 * t);
  };
  const Result broken = run({"validate", "--seed", "42", "--cases", "3"}, hooks);
  CHECK(broken.code == 2);
  CHECK(broken.err.find("validation failed at case 0") != std::string::npos);
}
