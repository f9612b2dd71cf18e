#include <benchmark/benchmark.h>

#include "clarcube/bijection.hpp"

using namespace clarcube;

namespace {

void BM_PerfectMatchings(benchmark::State& state) {
  const auto h = catalog("zigzag", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(h));
}
BENCHMARK(BM_PerfectMatchings)->DenseRange(4, 12, 4);

void BM_ZhangZhang(benchmark::State& state) {
  const auto h = catalog("zigzag", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zz_polynomial(h));
}
BENCHMARK(BM_ZhangZhang)->DenseRange(4, 12, 4);

void BM_ResonanceGraph(benchmark::State& state) {
  const auto h = catalog("zigzag", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_resonance_graph(h));
}
BENCHMARK(BM_ResonanceGraph)->DenseRange(4, 12, 4);

void BM_CubesGeneric(benchmark::State& state) {
  const auto g = build_resonance_graph(catalog("zigzag", static_cast<int>(state.range(0)))).to_simple_graph();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_induced_hypercubes(g));
}
BENCHMARK(BM_CubesGeneric)->DenseRange(4, 12, 4);

void BM_CubesFromSources(benchmark::State& state) {
  const auto h = catalog("zigzag", static_cast<int>(state.range(0)));
  const auto g = build_resonance_graph(h);
  const auto d = orient(h, g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hypercubes_from_sources(g, d));
}
BENCHMARK(BM_CubesFromSources)->DenseRange(4, 12, 4);

void BM_SturmCount(benchmark::State& state) {
  const auto zeta = zz_polynomial(catalog("coronene"));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_real_roots(zeta, RealInterval{Rational(-1), std::nullopt, true, false}));
}
BENCHMARK(BM_SturmCount);

void BM_VerifyAll(benchmark::State& state) {
  const auto h = catalog("coronene");
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(h, "coronene"));
}
BENCHMARK(BM_VerifyAll);

}  // namespace

BENCHMARK_MAIN();
