#include <benchmark/benchmark.h>

#include "gm/counting.hpp"
#include "gm/incidence.hpp"
#include "gm/matroids.hpp"
#include "gm/polys.hpp"

namespace {

void BM_CountY_Cycle(benchmark::State& state) {
  const gm::Graph G = gm::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gm::count_Y(G, 7));
}
BENCHMARK(BM_CountY_Cycle)->DenseRange(3, 6);

void BM_SymbolicDet_Complete(benchmark::State& state) {
  const gm::Graph G = gm::complete_graph(static_cast<int>(state.range(0)));
  const auto L = gm::reduced_laplacian(G);
  for (auto _ : state) benchmark::DoNotOptimize(gm::symbolic_det(L));
}
BENCHMARK(BM_SymbolicDet_Complete)->DenseRange(3, 5);

void BM_CountZ_Path(benchmark::State& state) {
  const gm::Graph G = gm::path_graph(4);
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm::count_Z(G, q));
}
BENCHMARK(BM_CountZ_Path)->Arg(2)->Arg(3)->Arg(4);

void BM_IncidencePairs(benchmark::State& state) {
  const gm::Graph G = gm::cycle_graph(3);
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm::count_A_unstratified(G, s, 3));
}
BENCHMARK(BM_IncidencePairs)->Arg(1)->Arg(2);

void BM_JPartial(benchmark::State& state) {
  const gm::Graph G = gm::complete_graph(3);
  const gm::PartialRank pi{3, {{0b011, 2}}};
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm::count_J_partial(G, 2, pi, q));
}
BENCHMARK(BM_JPartial)->Arg(2)->Arg(3)->Arg(4);

void BM_FanoCount(benchmark::State& state) {
  const gm::Matroid M = gm::fano();
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gm::count_X(M, 3, q));
}
BENCHMARK(BM_FanoCount)->Arg(2)->Arg(4)->Arg(8);

void BM_FanoBruteForce(benchmark::State& state) {
  const gm::Matroid M = gm::fano();
  for (auto _ : state) benchmark::DoNotOptimize(gm::count_X_bruteforce(M, 3, 2));
}
BENCHMARK(BM_FanoBruteForce);

void BM_ForestJ_Path(benchmark::State& state) {
  const gm::Graph F = gm::path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gm::forest_J(F, 3, 5));
}
BENCHMARK(BM_ForestJ_Path)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
