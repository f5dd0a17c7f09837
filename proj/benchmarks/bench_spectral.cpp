#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "circortho/spectral.hpp"

using namespace circortho;

namespace {

Generator random_generator(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> e(static_cast<size_t>(n));
  e[0] = Complex(1.0, 0.0);
  for (int j = 1; j < n; ++j) e[static_cast<size_t>(j)] = std::polar(1.0, angle(rng));
  return Generator(std::move(e));
}

void BM_eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Generator g = random_generator(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::eigenvalues(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_eigenvalues)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_verify_conditions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Generator g = random_generator(n, 7);
  auto d = DiagonalValue::from_d_squared(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectral::verify_conditions(g, d, 1e-9));
}
BENCHMARK(BM_verify_conditions)->Arg(16)->Arg(64)->Arg(128);

void BM_autocorrelation_full(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Generator g = random_generator(n, 9);
  for (auto _ : state) {
    Complex acc(0, 0);
    for (int s = 1; s < n; ++s) acc += spectral::autocorrelation(g.entries, s);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_autocorrelation_full)->Arg(64)->Arg(128);

}  // namespace
