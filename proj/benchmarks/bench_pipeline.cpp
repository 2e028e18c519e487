#include <benchmark/benchmark.h>

#include "flowmat/graph.hpp"
#include "flowmat/reconstruct.hpp"

namespace {

using flowmat::GramMatrix;
using flowmat::MatZ;
using flowmat::graph::Edge;
using flowmat::graph::Multigraph;

// Wheel with n rim vertices: genus n, 2n edges, 3-connected for n >= 3.
Multigraph wheel(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i % n + 1});
  }
  return Multigraph(n + 1, edges);
}

GramMatrix wheel_gram(std::size_t n) { return GramMatrix(flowmat::graph::fundamental_basis(wheel(n)).gram); }

void BM_StrictVoronoi(benchmark::State& state) {
  const auto m = wheel_gram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flowmat::strict_voronoi_vectors(m));
}
BENCHMARK(BM_StrictVoronoi)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_BuildCell(benchmark::State& state) {
  const auto m = wheel_gram(static_cast<std::size_t>(state.range(0)));
  const auto circuits = flowmat::strict_voronoi_vectors(m);
  for (auto _ : state) benchmark::DoNotOptimize(flowmat::build_cell(m, circuits));
  state.counters["facets"] = static_cast<double>(2 * circuits.size());
}
BENCHMARK(BM_BuildCell)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ReconstructThreeTriangles(benchmark::State& state) {
  const GramMatrix m(MatZ{{3, 1, 2}, {1, 3, 0}, {2, 0, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(flowmat::reconstruct(m));
}
BENCHMARK(BM_ReconstructThreeTriangles)->Unit(benchmark::kMicrosecond);

void BM_ReconstructWheel(benchmark::State& state) {
  const auto m = wheel_gram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flowmat::reconstruct(m));
}
BENCHMARK(BM_ReconstructWheel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state) {
  const auto m = flowmat::graph::graphic_matroid(wheel(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(flowmat::canonicalize(m));
}
BENCHMARK(BM_Canonicalize)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
