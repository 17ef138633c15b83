#include "qmac/congruence.hpp"
#include "qmac/macmahon.hpp"
#include "qmac/series.hpp"

#include <benchmark/benchmark.h>

using namespace qmac;

static void BM_RationalSeriesMul(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const QSeries f = sigma_series(1, N);
  const QSeries g = sigma_series(3, N);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_RationalSeriesMul)->Arg(100)->Arg(400);

static void BM_ModularSeriesMul(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const ModSeries f = reduce_mod(sigma_series(1, N), 11);
  const ModSeries g = reduce_mod(sigma_series(3, N), 11);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_ModularSeriesMul)->Arg(1000)->Arg(4000);

static void BM_MoDirect(benchmark::State& state) {
  const auto a = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mo_direct(a, 200));
}
BENCHMARK(BM_MoDirect)->DenseRange(1, 5);

static void BM_MoDirectMod(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mo_direct_mod(5, static_cast<std::size_t>(state.range(0)), 19));
}
BENCHMARK(BM_MoDirectMod)->Arg(2000);

static void BM_ProveSmall(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_progression(Family::MO, 3, 7, 3, 200));
}
BENCHMARK(BM_ProveSmall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
