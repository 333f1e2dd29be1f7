// Serial reference kernels against their OpenMP counterparts.

#include "catalysis/oracle.hpp"
#include "catalysis/region_search.hpp"
#include "catalysis/sweep_k2.hpp"
#include "support/test_support.hpp"

#include <benchmark/benchmark.h>

using namespace catalysis;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_SweepN50(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto [a, b] = fixtures::random_incomparable_pair(rng, 50, false, 100000);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_k2(a, b, mode(state)));
}

void BM_RegionSearchK3(benchmark::State& state) {
  const auto a = fixtures::sample_a_psi1();
  const auto b = fixtures::sample_a_psi2();
  for (auto _ : state) benchmark::DoNotOptimize(find_catalysts(a, b, 3, mode(state)));
}

void BM_GridSearchK3(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto [a, b] = fixtures::random_incomparable_pair(rng, 5);
  for (auto _ : state) benchmark::DoNotOptimize(grid_search(a, b, {3, 60}, mode(state)));
}

}  // namespace

BENCHMARK(BM_SweepN50)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionSearchK3)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSearchK3)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
