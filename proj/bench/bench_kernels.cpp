// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qhyp/montecarlo.hpp"
#include "qhyp/sweep.hpp"

namespace {

qhyp::SweepSpec fig2_spec(std::size_t steps) {
  qhyp::SweepSpec spec;
  spec.k = {0.0, 5.0, steps};
  spec.p = {0.0, 1.0, steps};
  spec.gamma = 0.1;
  spec.theta = 0.0;
  return spec;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = fig2_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhyp::sweep_serial(spec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = fig2_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhyp::sweep_parallel(spec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}

qhyp::TrialConfig mc_config(std::uint64_t photons) {
  qhyp::TrialConfig config;
  config.params = qhyp::ScenarioParams::create(2.0, 0.0, 0.0, 0.5);
  config.n_photons = photons;
  config.seed = 42;
  return config;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto config = mc_config(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhyp::run_simulation_serial(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto config = mc_config(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhyp::run_simulation(config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
