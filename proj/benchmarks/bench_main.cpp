#include <benchmark/benchmark.h>

#include "ztau/detail/small_ring.hpp"
#include "ztau/division.hpp"
#include "ztau/fermat_search.hpp"
#include "ztau/model_set.hpp"
#include "ztau/roots.hpp"

using namespace ztau;

static void BM_Multiply(benchmark::State& state) {
  RingElement x(123456, -98765);
  const RingElement y(31, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_Multiply);

static void BM_EuclidDiv(benchmark::State& state) {
  const RingElement x(123456789, -98765432);
  const RingElement y(3141, 2718);
  for (auto _ : state) benchmark::DoNotOptimize(euclid_div(x, y));
}
BENCHMARK(BM_EuclidDiv);

static void BM_ProbeRoot(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  detail::SmallElement t;
  if (!detail::checked_pow({12345, -6789}, k, t)) state.SkipWithError("overflow");
  t.m += 1;
  for (auto _ : state) benchmark::DoNotOptimize(detail::probe_kth_root(t, k));
}
BENCHMARK(BM_ProbeRoot)->Arg(2)->Arg(3)->Arg(5);

static void BM_KthPowerMultiprecision(benchmark::State& state) {
  const RingElement t = pow(RingElement(Integer("123456789123456789"), Integer(-42)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_kth_power(t, 5));
}
BENCHMARK(BM_KthPowerMultiprecision);

static void BM_Contains(benchmark::State& state) {
  const RingElement x(159, 258);
  for (auto _ : state) benchmark::DoNotOptimize(contains(x));
}
BENCHMARK(BM_Contains);

static void BM_Patch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(patch(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Patch)->Arg(4)->Arg(8);

static void BM_Search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.k = static_cast<unsigned>(state.range(0));
  cfg.bound = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search(cfg));
  state.counters["pairs/s"] =
      benchmark::Counter(static_cast<double>(box_pair_count(cfg.bound)), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Search)->Args({3, 12})->Args({4, 20})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
