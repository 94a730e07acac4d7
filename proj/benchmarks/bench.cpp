#include <benchmark/benchmark.h>

#include <random>

#include "homcoord/annotate.hpp"
#include "homcoord/complex.hpp"
#include "homcoord/opthom.hpp"
#include "homcoord/optbasis.hpp"
#include "homcoord/z2matrix.hpp"

namespace {

using namespace homcoord;

Z2Matrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Z2MatrixBuilder b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng() & 1) b.set(r, c);
  return std::move(b).build();
}

// Triangulated rows x cols grid; `holes` interior cells lose their lower
// triangle, so betti_1 == holes.
SimplicialComplex grid(int rows, int cols, int holes) {
  auto vid = [cols](int r, int c) { return static_cast<VertexId>(r * cols + c); };
  std::vector<std::pair<int, int>> hole_cells;
  for (int r = 1, picked = 0; r + 2 < rows && picked < holes; ++r)
    for (int c = 1; c + 2 < cols && picked < holes; c += 3) hole_cells.push_back({r, c}), ++picked;
  ComplexBuilder builder;
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) {
      builder.add({vid(r, c), vid(r, c + 1), vid(r + 1, c)});
      if (std::find(hole_cells.begin(), hole_cells.end(), std::make_pair(r, c)) ==
          hole_cells.end())
        builder.add({vid(r, c + 1), vid(r + 1, c), vid(r + 1, c + 1)});
    }
  return std::move(builder).build();
}

void BM_Eliminate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Z2Matrix a = random_square(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(a));
}
BENCHMARK(BM_Eliminate)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Z2Matrix a = random_square(n, 1);
  const Z2Matrix b = random_square(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}
BENCHMARK(BM_MatMul)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_AnnotationIndexGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimplicialComplex k = grid(n, n, 10);
  state.counters["simplices"] = static_cast<double>(k.total_size());
  for (auto _ : state) benchmark::DoNotOptimize(build_annotation_index(k, 1));
}
BENCHMARK(BM_AnnotationIndexGrid)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CoveringPipeline(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const SimplicialComplex k = grid(4, 50, g);
  const AnnotationIndex idx = build_annotation_index(k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_class_optima(k, idx));
}
BENCHMARK(BM_CoveringPipeline)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ShortestBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimplicialComplex k = grid(n, n, 6);
  const AnnotationIndex idx = build_annotation_index(k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_homology_basis(k, idx, 1));
}
BENCHMARK(BM_ShortestBasis)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
