#include <benchmark/benchmark.h>

#include <random>

#include "demo/fixtures.hpp"
#include "tracta/initial.hpp"
#include "tracta/linear_space.hpp"
#include "tracta/matroid.hpp"
#include "tracta/valuation.hpp"

using namespace tracta;

namespace {

PluckerVector random_sval(int r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return tropicalize_matroid(plucker_from_matrix(demo::random_full_rank(rng, r, n)), ValuationKind::Sval,
                             GammaKind::integer());
}

void BM_CheckStrong(benchmark::State& state) {
  const PluckerVector p = random_sval(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(check_plucker(p, Strength::Strong));
}
BENCHMARK(BM_CheckStrong)->Args({2, 5})->Args({3, 6})->Args({3, 7})->Args({4, 8});

void BM_CheckWeak(benchmark::State& state) {
  const PluckerVector p = random_sval(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(check_plucker(p, Strength::Weak));
}
BENCHMARK(BM_CheckWeak)->Args({3, 6})->Args({4, 8});

void BM_Circuits(benchmark::State& state) {
  const PluckerVector p = random_sval(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(circuits(p));
}
BENCHMARK(BM_Circuits)->Args({2, 5})->Args({3, 7});

void BM_Initial(benchmark::State& state) {
  const PluckerVector p = random_sval(3, 6, 9);
  const DirectionU u = demo::int_direction({0, 1, 2, 0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(initial(p, u));
}
BENCHMARK(BM_Initial);

void BM_PluckerFromHahnMatrix(benchmark::State& state) {
  std::mt19937_64 rng(10);
  const SeriesMatrix a = demo::random_full_rank(rng, 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(plucker_from_matrix(a));
}
BENCHMARK(BM_PluckerFromHahnMatrix);

void BM_LinearSpaceGrid(benchmark::State& state) {
  const PluckerVector p = demo::pn_valuated(ValuationKind::Sval, GammaKind::integer());
  std::vector<GammaExt> g;
  for (long v = 0; v < state.range(0); ++v) g.emplace_back(GammaValue::from_int(v));
  g.push_back(GammaExt::infinity());
  const SampleGrid grid = uniform_grid(4, g, finite_units(Tract::sign()));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_linear_space(p, grid));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * grid_size(grid)));
}
BENCHMARK(BM_LinearSpaceGrid)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
