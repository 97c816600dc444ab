#include <benchmark/benchmark.h>

#include <random>

#include "abc/monroe.hpp"
#include "abc/nonstandard.hpp"
#include "abc/phragmen.hpp"
#include "abc/thiele.hpp"

using namespace abc;

namespace {

ElectionInstance random_instance(int n, int m, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution approve(0.3);
  std::vector<std::vector<int>> ballots(n);
  for (auto& b : ballots) {
    for (int c = 0; c < m; ++c) {
      if (approve(rng)) b.push_back(c);
    }
    if (b.empty()) b.push_back(static_cast<int>(rng() % m));
  }
  return ElectionInstance(m, k, ballots);
}

SearchOptions options(benchmark::State& state) {
  SearchOptions opts;
  opts.execution = state.range(0) ? Execution::parallel : Execution::serial;
  opts.merge_clones = false;
  return opts;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_Pav(benchmark::State& state) {
  const ElectionInstance inst = random_instance(60, 20, 6, 1);
  const SearchOptions opts = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(thiele_exact(inst, ThieleWeights::pav(), opts));
  label(state);
}

void BM_Mav(benchmark::State& state) {
  const ElectionInstance inst = random_instance(60, 20, 6, 2);
  const SearchOptions opts = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(mav_exact(inst, opts));
  label(state);
}

void BM_Monroe(benchmark::State& state) {
  const ElectionInstance inst = random_instance(24, 14, 4, 3);
  const SearchOptions opts = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(monroe_exact(inst, opts));
  label(state);
}

void BM_LexminPhragmen(benchmark::State& state) {
  const ElectionInstance inst = random_instance(16, 10, 3, 4);
  const SearchOptions opts = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(lexmin_phragmen(inst, opts));
  label(state);
}

}  // namespace

BENCHMARK(BM_Pav)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mav)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Monroe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LexminPhragmen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
