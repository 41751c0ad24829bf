// Parallel elimination and all-pairs distance kernels against their serial
// references.

#include <benchmark/benchmark.h>

#include <random>

#include "cellsheaf/exactlin.hpp"
#include "cellsheaf/plgraph.hpp"

using namespace cellsheaf;

namespace {

RationalMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = Rational(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  // Make the rank deficient so kernel paths are exercised too.
  for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c) + m(1, c);
  for (std::size_t r = 0; r < n; ++r) m(r, 0) = 0;
  return m;
}

SimplicialComplex random_graph(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(3.0 / static_cast<double>(n));
  std::vector<VertexId> vs(n);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (VertexId i = 0; i < n; ++i) {
    vs[i] = i;
    for (VertexId j = i + 1; j < n; ++j)
      if (edge(rng)) es.emplace_back(i, j);
  }
  return make_graph(vs, es);
}

void BM_RankParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankSerialReference(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
}

void BM_DistanceTableParallel(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    EdgeDistanceTable t(g);
    benchmark::DoNotOptimize(t.size());
  }
}

void BM_DistanceTableSerialReference(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(reference::edge_distance_table(g).size());
}

}  // namespace

BENCHMARK(BM_RankParallel)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RankSerialReference)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DistanceTableParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DistanceTableSerialReference)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
