#include <cmath>

#include <benchmark/benchmark.h>

#include "legapprox/bestapprox.hpp"
#include "legapprox/bounds.hpp"
#include "legapprox/harness.hpp"
#include "legapprox/peano.hpp"
#include "legapprox/projections.hpp"
#include "legapprox/quadrature.hpp"

using namespace legapprox;

namespace {

void BM_GaussRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre_rule(order));
}
BENCHMARK(BM_GaussRule)->Arg(64)->Arg(512)->Arg(4096);

void BM_LegendreCoeffsAnalytic(benchmark::State& state) {
  const auto& f = find_entry("runge")->spec;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legendre_coeffs(f, n));
}
BENCHMARK(BM_LegendreCoeffsAnalytic)->Arg(30)->Arg(200);

void BM_LegendreCoeffsKinked(benchmark::State& state) {
  const auto& f = find_entry("abs_sin5")->spec;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legendre_coeffs(f, n));
}
BENCHMARK(BM_LegendreCoeffsKinked)->Arg(30)->Arg(200);

void BM_ChebyshevCoeffsEndpoint(benchmark::State& state) {
  const auto& f = find_entry("arccos")->spec;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_coeffs(f, n));
}
BENCHMARK(BM_ChebyshevCoeffsEndpoint)->Arg(30)->Arg(200);

void BM_Remez(benchmark::State& state) {
  const auto& f = find_entry("spline3")->spec;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(remez_best(f, n));
}
BENCHMARK(BM_Remez)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LebesgueConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_constant(n));
}
BENCHMARK(BM_LebesgueConstant)->Arg(50)->Arg(200);

void BM_PeanoKernelSup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(peano_kernel_sup(2, n));
}
BENCHMARK(BM_PeanoKernelSup)->Arg(16)->Arg(96)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
