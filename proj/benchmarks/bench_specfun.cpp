#include <benchmark/benchmark.h>

#include "cstates/specfun.hpp"

namespace {

using cstates::cplx;

void BM_BesselI(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(cstates::log_bessel_i(nu, 12.5));
}
BENCHMARK(BM_BesselI)->Arg(0)->Arg(27)->Arg(75);

void BM_BesselK(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(cstates::log_bessel_k(4.2, x));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(10)->Arg(200);

void BM_Hyp1F1(benchmark::State& state) {
  const cplx z(static_cast<double>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(cstates::hyp1f1({0.5, 0.2}, 3.1, z));
}
BENCHMARK(BM_Hyp1F1)->Arg(-20)->Arg(2)->Arg(20);

void BM_Hyp2F1AtOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cstates::hyp2f1(0.5, 0.5, 1.5, 1.0));
}
BENCHMARK(BM_Hyp2F1AtOne);

void BM_GaussLegendre(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cstates::gauss_legendre(order));
}
BENCHMARK(BM_GaussLegendre)->Arg(16)->Arg(200)->Arg(512);

void BM_Jacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cstates::jacobi_p(n, 1.5, 2.5, 0.3));
}
BENCHMARK(BM_Jacobi)->Arg(10)->Arg(50);

}  // namespace
