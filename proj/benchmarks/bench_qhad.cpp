#include <benchmark/benchmark.h>

#include "qhad/butson.hpp"
#include "qhad/families.hpp"
#include "qhad/search.hpp"

namespace {

void BM_HadamardCheck(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const qhad::QMatrix h = qhad::fourier_quat(n, 0.3, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(qhad::hadamard_check(h));
  state.SetComplexityN(n);
}
BENCHMARK(BM_HadamardCheck)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

void BM_OneParamGenerator(benchmark::State& state) {
  double a0 = qhad::kOneParamMin;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhad::order5_oneparam(a0));
    a0 = a0 >= qhad::kOneParamMax - 0.01 ? qhad::kOneParamMin : a0 + 0.01;
  }
}
BENCHMARK(BM_OneParamGenerator);

void BM_SphereGenerator(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhad::order5_sphere(t));
    t += 0.1;
  }
}
BENCHMARK(BM_SphereGenerator);

void BM_ClassifyOrder5(benchmark::State& state) {
  const auto core = qhad::order5_oneparam_components(-0.4).core;
  for (auto _ : state) benchmark::DoNotOptimize(qhad::classify_order5(core));
}
BENCHMARK(BM_ClassifyOrder5);

void BM_SolveCirculant(benchmark::State& state) {
  const auto order = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(qhad::solve_circulant(order, 10, seed++));
  state.SetItemsProcessed(state.iterations() * 10);  // restarts
}
BENCHMARK(BM_SolveCirculant)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_BH45(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qhad::bh45_emptiness());
}
BENCHMARK(BM_BH45)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
