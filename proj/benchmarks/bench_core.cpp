#include <benchmark/benchmark.h>

#include "admissible/cores.hpp"
#include "admissible/extractor.hpp"
#include "admissible/graph.hpp"
#include "admissible/graph_io.hpp"
#include "admissible/harness.hpp"
#include "admissible/oracle.hpp"

namespace {

using namespace admissible;

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

void BM_cycle_spectrum_petersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(cycle_length_spectrum(g));
}
BENCHMARK(BM_cycle_spectrum_petersen);

void BM_path_spectrum_petersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(path_length_spectrum(g, 0, 7));
}
BENCHMARK(BM_path_spectrum_petersen);

void BM_blocks(benchmark::State& state) {
  // chain of triangles, plenty of cut vertices
  const int links = static_cast<int>(state.range(0));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < links; ++i) {
    Vertex a = 2 * i, b = 2 * i + 1, c = 2 * i + 2;
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    edges.emplace_back(a, c);
  }
  Graph g = Graph::from_edges(2 * links + 1, edges);
  for (auto _ : state) benchmark::DoNotOptimize(blocks(g));
}
BENCHMARK(BM_blocks)->Arg(8)->Arg(64);

void BM_find_core_k7(benchmark::State& state) {
  Graph g = complete(7);
  for (auto _ : state) benchmark::DoNotOptimize(find_core(g, 0, 6));
}
BENCHMARK(BM_find_core_k7);

void BM_graph6_roundtrip(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)));
}
BENCHMARK(BM_graph6_roundtrip);

void BM_extract_paths_k7(benchmark::State& state) {
  Graph g = complete(7);
  ExtractorOptions opt;
  opt.oracle_threshold = 0;  // force the constructive route
  for (auto _ : state)
    benchmark::DoNotOptimize(find_admissible_paths(RootedGraph{g, 0, 6, std::nullopt}, 3, opt));
}
BENCHMARK(BM_extract_paths_k7);

}  // namespace

BENCHMARK_MAIN();
