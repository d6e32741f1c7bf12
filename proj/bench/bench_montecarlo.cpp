// Serial reference vs OpenMP estimator on the same workload. Both produce identical
// EmpiricalCcdf values; only wall time differs.

#include <benchmark/benchmark.h>

#include <vector>

#include "secrecy/montecarlo.hpp"

namespace {

using secrecy::NetworkParams;
using secrecy::SnrModel;
using secrecy::montecarlo::ScenarioSpec;

const std::vector<double>& grid() {
  static const std::vector<double> g{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  return g;
}

ScenarioSpec scenario(int which) {
  return which == 0 ? ScenarioSpec::full_info_nearest() : ScenarioSpec::full_info_optimal();
}

void BM_Serial(benchmark::State& state) {
  const NetworkParams p(1.0, 1.0, 4.0, SnrModel::from_db(20.0));
  const auto s = scenario(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(secrecy::montecarlo::estimate_ccdf_serial(p, s, grid(), n, 42));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(1));
}

void BM_OpenMP(benchmark::State& state) {
  const NetworkParams p(1.0, 1.0, 4.0, SnrModel::from_db(20.0));
  const auto s = scenario(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(secrecy::montecarlo::estimate_ccdf(p, s, grid(), n, 42, {}, workers));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(1));
}

}  // namespace

// Args: scenario (0 = nearest BS, 1 = best BS), trials[, workers]
BENCHMARK(BM_Serial)->Args({0, 20000})->Args({1, 5000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenMP)
    ->Args({0, 20000, 1})
    ->Args({0, 20000, 2})
    ->Args({0, 20000, 4})
    ->Args({1, 5000, 1})
    ->Args({1, 5000, 2})
    ->Args({1, 5000, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
