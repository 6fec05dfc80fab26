// Parallel kernels against their serial references.
#include "mobgp/distance.hpp"
#include "mobgp/expr.hpp"
#include "mobgp/mobility.hpp"
#include "mobgp/position.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mobgp;

const Graph &torus() {
  static const Graph g = graph_from_expression("cartesian(cycle(30),cycle(30))");
  return g;
}

const Graph &hamming() {
  static const Graph g = graph_from_expression("cartesian(complete(5),complete(4))");
  return g;
}

const Graph &prism() {
  static const Graph g = graph_from_expression("cartesian(cycle(8),complete(2))");
  return g;
}

void BM_Apsp_Parallel(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(torus()));
}
void BM_Apsp_Serial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::all_pairs_distances(torus()));
}

void BM_Gp_Parallel(benchmark::State &state) {
  const auto d = all_pairs_distances(hamming());
  for (auto _ : state) benchmark::DoNotOptimize(gp_number(hamming(), d));
}
void BM_Gp_Serial(benchmark::State &state) {
  const auto d = all_pairs_distances(hamming());
  for (auto _ : state) benchmark::DoNotOptimize(serial::gp_number(hamming(), d));
}

// Four robots on the prism over C8: a large component.
const Configuration &prism_start() {
  static const Configuration c({0, 3, 4, 11});
  return c;
}

void BM_Component_Parallel(benchmark::State &state) {
  const auto d = all_pairs_distances(prism());
  for (auto _ : state) benchmark::DoNotOptimize(configuration_component(prism(), d, prism_start()));
}
void BM_Component_Serial(benchmark::State &state) {
  const auto d = all_pairs_distances(prism());
  for (auto _ : state) benchmark::DoNotOptimize(serial::configuration_component(prism(), d, prism_start()));
}

BENCHMARK(BM_Apsp_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Apsp_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gp_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gp_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Component_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Component_Serial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
