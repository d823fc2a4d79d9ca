// Timings for the hot paths.  Polynomial constructions are memoized, so the
// benchmarks time the operators and scalar products applied to cached inputs.
#include <benchmark/benchmark.h>

#include "macbax/baxter.hpp"
#include "macbax/jack.hpp"
#include "macbax/macdonald.hpp"
#include "macbax/qwhittaker.hpp"

using namespace macbax;

static void BM_RatFuncArithmetic(benchmark::State& st) {
  RatFunc q = RatFunc::q_pow(1), t = RatFunc::t_pow(1), one(1);
  for (auto _ : st) {
    RatFunc acc;
    for (int i = 1; i <= st.range(0); ++i) acc += (one - t * q.pow(i)) / (one - q.pow(i + 1));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RatFuncArithmetic)->Arg(4)->Arg(8);

static void BM_MacdonaldOperator(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  SymFunc p = macdonald_P({2, 1}, n);
  for (auto _ : st) benchmark::DoNotOptimize(apply_macdonald_op(1, p));
}
BENCHMARK(BM_MacdonaldOperator)->Arg(2)->Arg(3);

static void BM_SpQt(benchmark::State& st) {
  int w = static_cast<int>(st.range(0));
  Partition lam = partitions_of(w).front();
  SymFunc p = macdonald_P(lam, w);
  for (auto _ : st) benchmark::DoNotOptimize(sp_qt(p, p));
}
BENCHMARK(BM_SpQt)->Arg(3)->Arg(4);

static void BM_BaxterApply(benchmark::State& st) {
  int k = static_cast<int>(st.range(0));
  SymFunc p = specialize_t(macdonald_P({2, 1}, 2), k);
  for (auto _ : st) benchmark::DoNotOptimize(apply_baxter(p, {0, k, 8, 0}));
}
BENCHMARK(BM_BaxterApply)->Arg(1)->Arg(2);

static void BM_Sekiguchi(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  SymFunc p = jack_P({2, 1}, n);
  for (auto _ : st) benchmark::DoNotOptimize(sekiguchi_apply(p));
}
BENCHMARK(BM_Sekiguchi)->Arg(2)->Arg(3);

static void BM_JackBaxter(benchmark::State& st) {
  long kap = st.range(0);
  SymFunc p = at_kappa(jack_P({2, 1}, 2), kap);
  for (auto _ : st) benchmark::DoNotOptimize(jack_baxter_apply(p, 0, kap));
}
BENCHMARK(BM_JackBaxter)->Arg(1)->Arg(3);

static void BM_QWhitDualBaxter(benchmark::State& st) {
  int K = static_cast<int>(st.range(0));
  SymFunc p = qwhit_P({2, 1}, 2);
  for (auto _ : st) benchmark::DoNotOptimize(qwhit_dual_baxter_apply(p, 0, K));
}
BENCHMARK(BM_QWhitDualBaxter)->Arg(4)->Arg(6);

static void BM_CauchyCheck(benchmark::State& st) {
  int D = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cauchy_check(2, 2, D));
}
BENCHMARK(BM_CauchyCheck)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
