#include "mnrule/quantum.hpp"
#include "mnrule/schubert.hpp"

#include <benchmark/benchmark.h>

using namespace mnrule;

static void BM_MnSchubertExample(benchmark::State& state) {
  const auto w = Permutation::parse("34165278");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mn_schubert(w, 4, r));
}
BENCHMARK(BM_MnSchubertExample)->DenseRange(1, 5);

static void BM_SchubertOracle(benchmark::State& state) {
  const auto w = Permutation::parse("34165278");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_schubert(power_sum_poly(r, 4) * schubert_poly(w)));
}
BENCHMARK(BM_SchubertOracle)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_QuantumMn(benchmark::State& state) {
  const GrContext ctx(4, static_cast<int>(state.range(0)));
  const auto box = ctx.box();
  for (auto _ : state) {
    for (int r = 1; r < ctx.n(); ++r) benchmark::DoNotOptimize(quantum_mn(box, r, ctx));
  }
}
BENCHMARK(BM_QuantumMn)->Arg(8)->Arg(12)->Arg(16);

static void BM_QuantumOracle(benchmark::State& state) {
  const GrContext ctx(4, static_cast<int>(state.range(0)));
  const auto box = ctx.box();
  for (auto _ : state) {
    for (int r = 1; r < ctx.n(); ++r) benchmark::DoNotOptimize(oracle_quantum_mn(box, r, ctx));
  }
}
BENCHMARK(BM_QuantumOracle)->Arg(8)->Arg(12)->Arg(16);

static void BM_NCore(benchmark::State& state) {
  const Partition lambda({40, 33, 27, 20, 12, 9, 4, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n_core(lambda, n));
}
BENCHMARK(BM_NCore)->Arg(3)->Arg(5)->Arg(8);

static void BM_MnClassical(benchmark::State& state) {
  const Partition lambda({6, 4, 3, 1});
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mn_classical(lambda, r, 6));
}
BENCHMARK(BM_MnClassical)->DenseRange(2, 10, 4);
BENCHMARK_MAIN();
