#include <benchmark/benchmark.h>

#include "circortho/zm.hpp"

using namespace circortho;

namespace {

void BM_search_zm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(zm::search_zm(m, n, false));
}
BENCHMARK(BM_search_zm)->Args({3, 12})->Args({5, 12})->Args({4, 14})->Unit(benchmark::kMillisecond);

void BM_search_zm_symmetric(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(zm::search_zm(m, n, true));
}
BENCHMARK(BM_search_zm_symmetric)->Args({5, 20})->Args({8, 24})->Unit(benchmark::kMillisecond);

void BM_verify_zm(benchmark::State& state) {
  auto g = zm::all_minus_generator(7, 23, 0);
  for (auto _ : state) benchmark::DoNotOptimize(zm::verify_zm(g));
}
BENCHMARK(BM_verify_zm);

}  // namespace
