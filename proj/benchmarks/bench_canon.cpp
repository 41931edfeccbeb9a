#include <benchmark/benchmark.h>

#include <random>

#include "elc/canon.hpp"
#include "elc/graph.hpp"

namespace {

elc::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<elc::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return elc::Graph::from_edges(n, edges);
}

void BM_CanonicalKeyRandom(benchmark::State& state) {
  const elc::Graph g = random_graph(int(state.range(0)), 0.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(elc::canonical_key(g));
}
BENCHMARK(BM_CanonicalKeyRandom)->Arg(8)->Arg(12)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalKeyCycle(benchmark::State& state) {
  const int n = int(state.range(0));
  std::vector<elc::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  const elc::Graph g = elc::Graph::from_edges(n, edges);
  elc::CanonOptions options;
  options.prune_automorphisms = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(elc::canonical_key(g, std::nullopt, options));
}
BENCHMARK(BM_CanonicalKeyCycle)->Args({12, 1})->Args({12, 0})->Args({32, 1});

}  // namespace
