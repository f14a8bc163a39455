#include <benchmark/benchmark.h>

#include <cmath>

#include "hyperlandau/analytic.hpp"
#include "hyperlandau/numeric.hpp"
#include "hyperlandau/susy.hpp"

using namespace hyperlandau;

static void BM_FdSpectrum(benchmark::State& state) {
  const Grid grid(1e-3, 25.0, static_cast<std::size_t>(state.range(0)));
  const auto v1 = [](double u) { return v1_constant_field(5, 7, u); };
  for (auto _ : state) benchmark::DoNotOptimize(fd_spectrum(v1, grid, 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FdSpectrum)->RangeMultiplier(2)->Range(1000, 16000)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

static void BM_SturmCount(benchmark::State& state) {
  const auto op = discretize([](double u) { return v1_constant_field(5, 7, u); }, Grid(1e-3, 25.0, 8000));
  for (auto _ : state) benchmark::DoNotOptimize(sturm_count(op, 12.5));
}
BENCHMARK(BM_SturmCount);

static void BM_JacobiEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double w = std::cosh(1.3);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eval(n, 1.5, -12.5, w));
}
BENCHMARK(BM_JacobiEval)->DenseRange(0, 8, 4);

static void BM_RadialEigenpair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radial_eigenpair(5, 7, n));
}
BENCHMARK(BM_RadialEigenpair)->DenseRange(0, 4, 2)->Unit(benchmark::kMillisecond);

static void BM_RadialEvaluate(benchmark::State& state) {
  const auto pair = radial_eigenpair(5, 7, 3);
  double u = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair.g1(u));
    u = u > 30.0 ? 0.01 : u + 0.37;
  }
}
BENCHMARK(BM_RadialEvaluate);
BENCHMARK_MAIN();
