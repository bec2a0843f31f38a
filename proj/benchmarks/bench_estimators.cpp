#include <benchmark/benchmark.h>

#include "quadbound/ensemble.hpp"
#include "quadbound/estimators.hpp"
#include "quadbound/oracle.hpp"
#include "quadbound/polynomial.hpp"

using namespace quadbound;

static void BM_GqNodes(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gq_nodes(d, 1.0));
  }
}
BENCHMARK(BM_GqNodes)->Arg(4)->Arg(8)->Arg(12);

static void BM_SrNodes(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Region region = Region::cube(d, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sr_nodes(region));
  }
}
BENCHMARK(BM_SrNodes)->Arg(4)->Arg(6)->Arg(8);

static void BM_GqEstimateGaussian(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(1));
  const NodeSet nodes = gq_nodes(d, 1.5);
  const Polynomial poly = Polynomial::random_cubic(d, 7);
  OracleSpec spec;
  spec.kind = OracleKind::Gaussian;
  spec.sigma = 1.0;
  for (auto _ : state) {
    Oracle oracle(spec);
    oracle.log().set_point_tracking(false);
    benchmark::DoNotOptimize(estimate(nodes, oracle, poly, m));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(m * nodes.nodes.size()));
}
BENCHMARK(BM_GqEstimateGaussian)->Args({6, 4})->Args({10, 4})->Args({6, 64});

static void BM_RandomCubic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Polynomial::random_cubic(d, seed++));
  }
}
BENCHMARK(BM_RandomCubic)->Arg(3)->Arg(8)->Arg(16);

static void BM_PackingSet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_packing_set(d, seed++));
  }
}
BENCHMARK(BM_PackingSet)->Arg(8)->Arg(16)->Arg(24);

BENCHMARK_MAIN();
