#include "flatkit/cyclotomic.hpp"
#include "flatkit/degeneracy.hpp"
#include "flatkit/flats.hpp"
#include "flatkit/generators.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace flatkit;

void BM_GainGraphRank(benchmark::State& state) {
  auto m = dowling(4, static_cast<int>(state.range(0))).matroid;
  SplitMix64 rng(1);
  const std::uint64_t mask = m->all().bits();
  for (auto _ : state) {
    // fresh masks each iteration so the memo cache does not trivialize this
    benchmark::DoNotOptimize(m->rank(ElementSet(rng.next() & mask)));
  }
}
BENCHMARK(BM_GainGraphRank)->Arg(2)->Arg(3)->Arg(5);

void BM_LinearRankRational(benchmark::State& state) {
  auto m = uniform_vandermonde(4, static_cast<int>(state.range(0)));
  SplitMix64 rng(2);
  const std::uint64_t mask = m->all().bits();
  for (auto _ : state) {
    benchmark::DoNotOptimize(m->rank(ElementSet(rng.next() & mask)));
  }
}
BENCHMARK(BM_LinearRankRational)->Arg(8)->Arg(12);

void BM_CyclotomicMultiply(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  auto a = Cyclotomic::root_power(order, 1) + Cyclotomic::one(order);
  auto b = Cyclotomic::root_power(order, order - 1) - Cyclotomic::one(order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(3)->Arg(12);

void BM_PlaneEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    auto m = dowling(4, static_cast<int>(state.range(0))).matroid;  // cold cache
    state.ResumeTiming();
    benchmark::DoNotOptimize(flats_of_rank(*m, 3));
  }
}
BENCHMARK(BM_PlaneEnumeration)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LargestDegenerateSet(benchmark::State& state) {
  auto m = figure1(static_cast<int>(state.range(0))).matroid;
  flats_of_rank(*m, 2);  // warm the rank memo once
  for (auto _ : state) {
    benchmark::DoNotOptimize(largest_k_degenerate(*m, 4));
  }
}
BENCHMARK(BM_LargestDegenerateSet)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
