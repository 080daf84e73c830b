#include <benchmark/benchmark.h>

#include <random>

#include "wiremono/monoid.hpp"

namespace {

using namespace wiremono;

Matching sample_matching(int n, std::mt19937_64& rng) {
  std::vector<int> free;
  for (int p = 0; p < 2 * n; ++p) free.push_back(p);
  std::vector<std::pair<int, int>> pairs;
  while (!free.empty()) {
    const int p = free.front();
    free.erase(free.begin());
    std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
    const size_t j = pick(rng);
    pairs.emplace_back(p, free[j]);
    free.erase(free.begin() + static_cast<long>(j));
  }
  return Matching::from_pairs(n, pairs);
}

void BM_BrauerMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  const Matching a = sample_matching(n, rng);
  const Matching b = sample_matching(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brauer_multiply(a, b));
  }
}
BENCHMARK(BM_BrauerMultiply)->Arg(3)->Arg(9)->Arg(32)->Arg(128);

void BM_PartitionMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(43);
  const SetPartition a = SetPartition::of(sample_matching(n, rng));
  const SetPartition b = SetPartition::of(sample_matching(n, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_multiply(a, b));
  }
}
BENCHMARK(BM_PartitionMultiply)->Arg(3)->Arg(9)->Arg(32)->Arg(128);

void BM_RandomElement(benchmark::State& state) {
  const MonoidKind kind = pm_twisted_brauer(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(44);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_element(kind, 30, rng));
  }
}
BENCHMARK(BM_RandomElement)->Arg(3)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
