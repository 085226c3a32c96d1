#include <benchmark/benchmark.h>

#include "mpemba/entanglement.hpp"
#include "mpemba/lindblad_oracle.hpp"
#include "mpemba/propagator.hpp"
#include "mpemba/sweeps.hpp"
#include "mpemba/timescales.hpp"

namespace {

using namespace mpemba;

void BM_Propagate(benchmark::State& state) {
  const XStateParams s0 = make_xstate(0.3, 0.1, 0.2, 0.4, 0.3, 0.5);
  const DampingRates rates(0.1, 10);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(s0, rates, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_Propagate);

void BM_Rk4Step(benchmark::State& state) {
  DensityMatrix4 rho = to_density(make_xstate(0.3, 0.1, 0.2, 0.4, 0.3, 0.5));
  const DampingRates rates(0.1, 10);
  for (auto _ : state) {
    rho = rk4_step(rho, rates, 1e-6);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_WoottersBlock(benchmark::State& state) {
  const DensityMatrix4 rho = to_density(make_xstate(0.3, 0.1, 0.2, 0.4, 0.3, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence(rho));
}
BENCHMARK(BM_WoottersBlock);

void BM_WoottersGeneral(benchmark::State& state) {
  const DensityMatrix4 rho = to_density(make_xstate(0.3, 0.1, 0.2, 0.4, 0.3, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence_general(rho));
}
BENCHMARK(BM_WoottersGeneral);

void BM_AsymmetricCrossing(benchmark::State& state) {
  const InitialParams p1(0.4, 0.25);
  const InitialParams p2(0.8, 0.35);
  const DampingRates rates(0.1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(crossing_time(p1, p2, rates));
}
BENCHMARK(BM_AsymmetricCrossing);

void BM_PhaseDiagram(benchmark::State& state) {
  const InitialParams ref(0.25, 0.4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridSpec grid{0.0, 0.5, 0.0, 1.0, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(phase_diagram(ref, grid, DampingRates(0.1, 10)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}
BENCHMARK(BM_PhaseDiagram)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
