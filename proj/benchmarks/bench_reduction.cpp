#include <benchmark/benchmark.h>

#include "wiremono/identity.hpp"
#include "wiremono/reduction.hpp"

namespace {

using namespace wiremono;

void BM_BuildReducedIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Identity comm = parse_identity("xy = yx");
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_reduced_identity(comm, n));
  }
}
BENCHMARK(BM_BuildReducedIdentity)->Arg(3)->Arg(5);

void BM_InverseWords(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_inverse_words(m, 3));
  }
}
BENCHMARK(BM_InverseWords)->Arg(2)->Arg(3);

void BM_EvaluateWord(benchmark::State& state) {
  const MonoidKind kind = pm_twisted_brauer(3);
  const Identity built = build_reduced_identity(parse_identity("xy = yx"), 3);
  Substitution sub;
  sub.emplace(1, random_element(kind, 12, 5));
  sub.emplace(2, random_element(kind, 12, 6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(built.lhs, sub));
  }
}
BENCHMARK(BM_EvaluateWord);

}  // namespace
