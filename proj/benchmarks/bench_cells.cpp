#include <benchmark/benchmark.h>

#include "cubetess/analysis.hpp"
#include "cubetess/lattice.hpp"
#include "cubetess/meshio.hpp"
#include "cubetess/voronoi.hpp"

using namespace cubetess;

namespace {

const RefinementPlan kL1({Stage::L0, Stage::L1});
const RefinementPlan kL2W({Stage::L0, Stage::L1, Stage::L2W});
const RefinementPlan kL3({Stage::L0, Stage::L1, Stage::L2W, Stage::L3});

Site rep_site(SiteClass cls) {
  return {representative(cls), cls, class_level(cls)};
}

void BM_CellTruncatedOctahedron(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(voronoi_cell(rep_site(SiteClass::Gamma), kL1));
}
BENCHMARK(BM_CellTruncatedOctahedron);

void BM_CellTetrakis(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(voronoi_cell(rep_site(SiteClass::Gamma), kL2W));
}
BENCHMARK(BM_CellTetrakis);

void BM_CellLambda(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(voronoi_cell(rep_site(SiteClass::Lambda), kL3));
}
BENCHMARK(BM_CellLambda);

void BM_CellW3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(voronoi_cell(rep_site(SiteClass::W), kL3));
}
BENCHMARK(BM_CellW3);

void BM_Volume(benchmark::State& state) {
  ConvexCell cell = voronoi_cell(rep_site(SiteClass::Lambda), kL3);
  for (auto _ : state) benchmark::DoNotOptimize(volume(cell));
}
BENCHMARK(BM_Volume);

void BM_GenerateL3(benchmark::State& state) {
  const long n = state.range(0);
  BoxR box{{0, 0, 0}, {Rat(n), Rat(n), Rat(n)}};
  for (auto _ : state) benchmark::DoNotOptimize(generate(kL3, box));
  state.SetItemsProcessed(state.iterations() * 30 * n * n * n);
}
BENCHMARK(BM_GenerateL3)->Arg(2)->Arg(4);

void BM_ShellHistogram(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(shell_histogram(SiteClass::Gamma, kL2W, Rat(29, 16)));
}
BENCHMARK(BM_ShellHistogram);

void BM_MonteCarloClassify(benchmark::State& state) {
  const long samples = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(montecarlo_volumes(kL3, samples, 1));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_MonteCarloClassify)->Arg(100000);

void BM_MeshExport(benchmark::State& state) {
  std::vector<ConvexCell> cells;
  for (SiteClass cls : {SiteClass::Gamma, SiteClass::W, SiteClass::Lambda})
    cells.push_back(voronoi_cell(rep_site(cls), kL3));
  for (auto _ : state) benchmark::DoNotOptimize(to_float_mesh(cells));
}
BENCHMARK(BM_MeshExport);

}  // namespace

BENCHMARK_MAIN();
