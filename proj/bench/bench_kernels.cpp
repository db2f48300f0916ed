#include <benchmark/benchmark.h>

#include "polaritylab/enumerate.hpp"
#include "polaritylab/generate.hpp"
#include "polaritylab/obstructions.hpp"

using namespace polaritylab;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_EnumerateGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n, mode(state)));
  label(state);
}
BENCHMARK(BM_EnumerateGraphs)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

void BM_GenerateClass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate_class(ClassId::p4_extendible, n, mode(state)));
  label(state);
}
BENCHMARK(BM_GenerateClass)->ArgsProduct({{0, 1}, {8, 9}})->Unit(benchmark::kMillisecond);

void BM_FilterObstructions(benchmark::State& state) {
  const auto members = generate_class(ClassId::p4_extendible, static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(filter_minimal_obstructions(members, PolarSpec::sk_polar(2, 1), mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * members.size()));
  label(state);
}
BENCHMARK(BM_FilterObstructions)->ArgsProduct({{0, 1}, {8, 9}})->Unit(benchmark::kMillisecond);

void BM_FilterAllGraphs(benchmark::State& state) {
  const auto graphs = enumerate_graphs(8);
  for (auto _ : state) benchmark::DoNotOptimize(filter_minimal_obstructions(graphs, PolarSpec::unipolar(), mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graphs.size()));
  label(state);
}
BENCHMARK(BM_FilterAllGraphs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
