#include <benchmark/benchmark.h>

#include "circortho/search.hpp"

using namespace circortho;

namespace {

void BM_search_order(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  search::SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search::search_order(n, opts));
}
BENCHMARK(BM_search_order)
    ->Args({12, 1})
    ->Args({16, 1})
    ->Args({18, 1})
    ->Args({20, 1})
    ->Args({20, 2})
    ->Args({22, 2})
    ->Unit(benchmark::kMillisecond);

void BM_canonical_key(benchmark::State& state) {
  auto sols = search::search_order(16).solutions;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search::canonical_key(sols[i % sols.size()].generator));
    ++i;
  }
}
BENCHMARK(BM_canonical_key);

}  // namespace
