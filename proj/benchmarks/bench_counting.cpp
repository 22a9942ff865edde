#include <benchmark/benchmark.h>

#include "waring/ball.hpp"
#include "waring/counting.hpp"

using namespace waring;

static void BM_CountExactSchoolbook(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  const auto N = state.range(1);
  for (auto _ : state) {
    auto table = count_exact(WaringInstance(2, d, N));
    benchmark::DoNotOptimize(table.total());
  }
}
BENCHMARK(BM_CountExactSchoolbook)
    ->Args({8, 2000})
    ->Args({16, 2000})
    ->Args({16, 5000});

static void BM_CountExactNtt(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  const auto N = state.range(1);
  CountingOptions force;
  force.ntt_threshold = 1;
  for (auto _ : state) {
    auto table = count_exact(WaringInstance(2, d, N), force);
    benchmark::DoNotOptimize(table.total());
  }
}
BENCHMARK(BM_CountExactNtt)->Args({8, 2000})->Args({16, 2000})->Args({16, 5000});

static void BM_Bruteforce(benchmark::State& state) {
  for (auto _ : state) {
    auto n = count_bruteforce(WaringInstance(2, 5, state.range(0)));
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Bruteforce)->Arg(100)->Arg(200);

static void BM_BallCount(benchmark::State& state) {
  for (auto _ : state) {
    auto b = ball_count(2, static_cast<int>(state.range(0)), 16 * state.range(0) * state.range(0));
    benchmark::DoNotOptimize(b.ratio);
  }
}
BENCHMARK(BM_BallCount)->Arg(5)->Arg(10);
