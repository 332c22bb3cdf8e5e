// Serial per-pair reference vs the subset-sum kernel (OpenMP over F).
// Args: dimension d.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "bisfan/bisector.hpp"
#include "bisfan/sampling.hpp"

using namespace bisfan;

namespace {

template <typename Enumerate>
void run(benchmark::State& state, const UnitBall& ball, Enumerate enumerate) {
  Sampler s(42);
  std::vector<QVector> sites;
  for (int k = 0; k < 8; ++k) sites.push_back(s.generic_site(ball));
  std::size_t k = 0;
  for (auto _ : state) {
    auto cells = enumerate(ball, sites[k++ % sites.size()]);
    benchmark::DoNotOptimize(cells);
  }
  state.counters["pairs"] = static_cast<double>(ball.num_facets() * ball.num_facets());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_CrossReference(benchmark::State& state) {
  run(state, make_cross_polytope(static_cast<std::size_t>(state.range(0))), enumerate_cells_reference);
}
void BM_CrossKernel(benchmark::State& state) {
  run(state, make_cross_polytope(static_cast<std::size_t>(state.range(0))), enumerate_cells);
}
void BM_RootReference(benchmark::State& state) {
  run(state, make_root_polytope_a(static_cast<std::size_t>(state.range(0))), enumerate_cells_reference);
}
void BM_RootKernel(benchmark::State& state) {
  run(state, make_root_polytope_a(static_cast<std::size_t>(state.range(0))), enumerate_cells);
}
void BM_CubeReference(benchmark::State& state) {
  run(state, make_cube(static_cast<std::size_t>(state.range(0))), enumerate_cells_reference);
}
void BM_CubeParallel(benchmark::State& state) {
  run(state, make_cube(static_cast<std::size_t>(state.range(0))), enumerate_cells);
}

}  // namespace

BENCHMARK(BM_CrossReference)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossKernel)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootReference)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootKernel)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeReference)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeParallel)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
