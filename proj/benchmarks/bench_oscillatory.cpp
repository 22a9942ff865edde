#include <benchmark/benchmark.h>

#include "waring/arcs.hpp"
#include "waring/oscillatory.hpp"

using namespace waring;

static void BM_VIntegralAdaptive(benchmark::State& state) {
  const double theta = static_cast<double>(state.range(0)) / 4900.0;  // T = X^k theta
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_integral(2, 70, theta, 1e-9));
  }
}
BENCHMARK(BM_VIntegralAdaptive)->Arg(8)->Arg(256)->Arg(4096);

static void BM_VFilonBuild(benchmark::State& state) {
  for (auto _ : state) {
    FilonV filon(2, 70.0);
    benchmark::DoNotOptimize(filon(0.01));
  }
}
BENCHMARK(BM_VFilonBuild);

static void BM_VFilonEval(benchmark::State& state) {
  const FilonV filon(2, 70.0);
  const double theta = static_cast<double>(state.range(0)) / 4900.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filon(theta));
  }
}
BENCHMARK(BM_VFilonEval)->Arg(8)->Arg(256)->Arg(4096);

static void BM_ArcIntegral(benchmark::State& state) {
  const auto ladder = FourierLadder::build(2, static_cast<int>(state.range(0)), 70);
  const Interval arc{0.24, 0.26};
  for (auto _ : state) {
    benchmark::DoNotOptimize(arc_integral(ladder, 4900, arc));
  }
}
BENCHMARK(BM_ArcIntegral)->Arg(8)->Arg(16);

static void BM_LadderBuild(benchmark::State& state) {
  for (auto _ : state) {
    auto ladder = FourierLadder::build(2, static_cast<int>(state.range(0)), 70);
    benchmark::DoNotOptimize(ladder.modes());
  }
}
BENCHMARK(BM_LadderBuild)->Arg(8)->Arg(16);
