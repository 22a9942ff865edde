#include <benchmark/benchmark.h>

#include "waring/expsums.hpp"
#include "waring/singular.hpp"

using namespace waring;

static void BM_GaussTable(benchmark::State& state) {
  const auto q = state.range(0);
  for (auto _ : state) {
    auto values = gauss_sum_all(2, q);
    benchmark::DoNotOptimize(values.data());
  }
}
BENCHMARK(BM_GaussTable)->Arg(499)->Arg(1000)->Arg(4096);

static void BM_WeylSum(benchmark::State& state) {
  const auto X = state.range(0);
  double xi = 0.381966011250105;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_sum(2, X, xi));
  }
}
BENCHMARK(BM_WeylSum)->Arg(64)->Arg(1024);

static void BM_HuaMoment(benchmark::State& state) {
  const auto X = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hua_moment(2, X).value);
  }
}
BENCHMARK(BM_HuaMoment)->Arg(16)->Arg(64);

static void BM_TruncatedSeries(benchmark::State& state) {
  // steady-state cost per N: tables are cached after the first pass
  truncated_series(2, 9, 1, state.range(0));
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_series(2, 9, ++n, state.range(0)).value);
  }
}
BENCHMARK(BM_TruncatedSeries)->Arg(300)->Arg(1000);

static void BM_LocalDensity(benchmark::State& state) {
  local_density(2, 9, 1, state.range(0));
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_density(2, 9, ++n, state.range(0)).value);
  }
}
BENCHMARK(BM_LocalDensity)->Arg(2)->Arg(47);
