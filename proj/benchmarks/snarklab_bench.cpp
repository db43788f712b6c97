#include <benchmark/benchmark.h>

#include "colouring_tree.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/connectivity.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/networks.hpp"

using namespace snarklab;

static void BM_ColourFlowerSnark(benchmark::State& state) {
  MultiGraph g = flower_snark(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_colourable(g));
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_ColourFlowerSnark)->Arg(5)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

static void BM_ColourBacktrackFlowerSnark(benchmark::State& state) {
  MultiGraph g = flower_snark(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(backtrack_colouring(g));
}
BENCHMARK(BM_ColourBacktrackFlowerSnark)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CarvingColourRing44(benchmark::State& state) {
  MultiGraph g = build_ring(1, true);
  std::vector<bool> constrained(g.order(), true);
  for (auto _ : state) benchmark::DoNotOptimize(detail::carving_colouring(g, constrained, false));
}
BENCHMARK(BM_CarvingColourRing44)->Unit(benchmark::kMillisecond);

static void BM_ColourM2(benchmark::State& state) {
  MultiGraph g = build_M(2);
  for (auto _ : state) benchmark::DoNotOptimize(is_colourable(g));
}
BENCHMARK(BM_ColourM2)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_ResistancePetersen(benchmark::State& state) {
  MultiGraph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(resistance(g));
}
BENCHMARK(BM_ResistancePetersen)->Unit(benchmark::kMicrosecond);

static void BM_OddnessH1(benchmark::State& state) {
  MultiGraph g = build_H1();
  for (auto _ : state) benchmark::DoNotOptimize(oddness(g));
}
BENCHMARK(BM_OddnessH1)->Unit(benchmark::kMillisecond);

static void BM_PerfectMatchingsFlower(benchmark::State& state) {
  MultiGraph g = flower_snark(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_perfect_matching(g, [&](const PerfectMatching&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PerfectMatchingsFlower)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_CyclicConnectivityRing44(benchmark::State& state) {
  MultiGraph g = build_ring(1, true);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_connectivity(g));
}
BENCHMARK(BM_CyclicConnectivityRing44)->Unit(benchmark::kMillisecond);

static void BM_CanonicalFormRing44(benchmark::State& state) {
  MultiGraph g = build_ring(1, true);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRing44)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
