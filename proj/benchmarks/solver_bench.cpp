#include "fcnlab/constructions.hpp"
#include "fcnlab/generators.hpp"
#include "fcnlab/graph_io.hpp"
#include "fcnlab/solvers.hpp"

#include <benchmark/benchmark.h>

using namespace fcnlab;

namespace {

void BM_GenerateFcn(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fcn(level));
}
BENCHMARK(BM_GenerateFcn)->DenseRange(0, 4);

void BM_SerializeFcn3(benchmark::State& state) {
  const Graph g = fcn(3);
  for (auto _ : state) benchmark::DoNotOptimize(to_json(g));
}
BENCHMARK(BM_SerializeFcn3);

void BM_SolveFcn1(benchmark::State& state) {
  const Graph g = fcn(1);
  const auto kind = kAllKinds[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(kind_name(kind)));
  for (auto _ : state) benchmark::DoNotOptimize(min_param(g, kind));
}
BENCHMARK(BM_SolveFcn1)->DenseRange(0, static_cast<int>(kAllKinds.size()) - 1)
    ->Unit(benchmark::kMillisecond);

void BM_SolveFcn2(benchmark::State& state) {
  const Graph g = fcn(2);
  const auto kind = static_cast<ParameterKind>(state.range(0));
  state.SetLabel(std::string(kind_name(kind)));
  for (auto _ : state) benchmark::DoNotOptimize(min_param(g, kind, Budget::seconds(5)));
}
BENCHMARK(BM_SolveFcn2)
    ->Arg(static_cast<int>(ParameterKind::IDOM))
    ->Arg(static_cast<int>(ParameterKind::CDOM))
    ->Arg(static_cast<int>(ParameterKind::TWODOM))
    ->Arg(static_cast<int>(ParameterKind::DIM))
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_VerifyConstructionFcn3(benchmark::State& state) {
  const Graph g = fcn(3);
  const Certificate c = construct(ParameterKind::DOM, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c, g));
}
BENCHMARK(BM_VerifyConstructionFcn3);

void BM_ResolvingSearchFcn2(benchmark::State& state) {
  const Graph g = fcn(2);
  for (auto _ : state) benchmark::DoNotOptimize(find_resolving_set(g, 16, 1, Budget::seconds(60)));
}
BENCHMARK(BM_ResolvingSearchFcn2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
