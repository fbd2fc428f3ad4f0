#include <benchmark/benchmark.h>

#include "cstates/gazeau_klauder.hpp"
#include "cstates/intelligent.hpp"
#include "cstates/perelomov.hpp"
#include "cstates/poschl_teller_position.hpp"

namespace {

using namespace cstates;

void BM_GkState(benchmark::State& state) {
  const auto m = SpectrumModel::poschl_teller(2.0, 2.0);
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gk_state(m, {1.0, 1.0}, 0.3, n_max));
}
BENCHMARK(BM_GkState)->Arg(60)->Arg(400);

void BM_GisCoefficients(benchmark::State& state) {
  const auto m = SpectrumModel::poschl_teller(3.5, 1.2);
  const GISParameters p = gis_parameters({1.0, 0.5}, {0.5, 0.5});
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gis_coefficients(m, p, n_max, 1e-16));
}
BENCHMARK(BM_GisCoefficients)->Arg(120)->Arg(320);

void BM_GisOracle(benchmark::State& state) {
  const auto m = SpectrumModel::poschl_teller(3.5, 1.2);
  const LadderRep rep = build_ladder(m, 200);
  for (auto _ : state) benchmark::DoNotOptimize(gis_recurrence_oracle(rep, {1.0, 0.5}, {0.5, 0.5}));
}
BENCHMARK(BM_GisOracle);

void BM_Uncertainty(benchmark::State& state) {
  const auto m = SpectrumModel::poschl_teller(2.0, 2.0);
  const FockVector v = gis_coefficients(m, gis_parameters(1.0, 2.0), 200, 1e-16);
  const LadderRep rep = build_ladder(m, 200);
  for (auto _ : state) benchmark::DoNotOptimize(uncertainty(rep, v));
}
BENCHMARK(BM_Uncertainty);

void BM_CnExpansionBuild(benchmark::State& state) {
  const auto m = SpectrumModel::poschl_teller(2.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(CnExpansion(m, 5));
}
BENCHMARK(BM_CnExpansionBuild)->Unit(benchmark::kMillisecond);

void BM_CnEvaluate(benchmark::State& state) {
  const CnExpansion e(SpectrumModel::poschl_teller(2.0, 2.0), 5);
  const double r = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(e.evaluate(r));
}
// r = 0.5 sums directly; r = 3 goes through the continued branch.
BENCHMARK(BM_CnEvaluate)->Arg(5)->Arg(30);

void BM_CnOde(benchmark::State& state) {
  const auto m = SpectrumModel::poschl_teller(2.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(cn_ode(m, 1.0, 6, 1e-3));
}
BENCHMARK(BM_CnOde)->Unit(benchmark::kMillisecond);

void BM_GramMatrix(benchmark::State& state) {
  const PTParameters p(2.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(p, 8));
}
BENCHMARK(BM_GramMatrix)->Unit(benchmark::kMillisecond);

}  // namespace
