#include <benchmark/benchmark.h>

#include "pwe/pseudowronskian.hpp"

namespace {

const pwe::UniversalCharacter kExample = pwe::make_uc({3, 1, -2}, {3, -3});

void BM_PseudoWronskian(benchmark::State& state) {
  const auto model = static_cast<pwe::Model>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwe::pseudo_wronskian(model, kExample));
}
BENCHMARK(BM_PseudoWronskian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyEquivalence(benchmark::State& state) {
  const auto model = static_cast<pwe::Model>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwe::verify_equivalence(model, kExample));
}
BENCHMARK(BM_VerifyEquivalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto model = static_cast<pwe::Model>(state.range(0));
  const auto uc = pwe::make_uc({2, -1}, {1, -2});
  for (auto _ : state) benchmark::DoNotOptimize(pwe::oracle_check(model, uc));
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
