#include <benchmark/benchmark.h>

#include "elc/census.hpp"
#include "elc/code.hpp"
#include "elc/generate.hpp"
#include "elc/orbit.hpp"

namespace {

elc::GenMatrix hamming() {
  return elc::GenMatrix(7, {0b1100001, 0b1010010, 0b0110100, 0b1111000});
}

void BM_ElcOrbitHamming(benchmark::State& state) {
  const elc::CodeGraph cg = elc::code_to_graph(hamming());
  for (auto _ : state) benchmark::DoNotOptimize(elc::elc_orbit_unlabeled(cg.graph, cg.coloring));
}
BENCHMARK(BM_ElcOrbitHamming);

void BM_LabeledOrbitHamming(benchmark::State& state) {
  const elc::CodeGraph cg = elc::code_to_graph(hamming());
  for (auto _ : state) benchmark::DoNotOptimize(elc::elc_orbit_labeled(cg.graph));
}
BENCHMARK(BM_LabeledOrbitHamming);

void BM_ClassifyBipartite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(elc::classify_bipartite(int(state.range(0))));
}
BENCHMARK(BM_ClassifyBipartite)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_StreamElc(benchmark::State& state) {
  const auto graphs = elc::connected_graphs(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(elc::classify_stream(graphs, elc::OrbitKind::kElc));
  }
}
BENCHMARK(BM_StreamElc)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_MinDistance(benchmark::State& state) {
  const elc::GenMatrix m = hamming();
  if (state.range(0) == 0) {
    for (auto _ : state) benchmark::DoNotOptimize(elc::min_distance_bruteforce(m));
  } else {
    for (auto _ : state) benchmark::DoNotOptimize(elc::min_distance_via_orbit(m));
  }
}
BENCHMARK(BM_MinDistance)->Arg(0)->Arg(1);

}  // namespace
