#include <benchmark/benchmark.h>

#include "pwe/determinant.hpp"
#include "pwe/pseudowronskian.hpp"

namespace {

// Flat characters psi = (0..n-1): an n x n matrix of full polynomial entries.
pwe::ZMatrix staircase(pwe::Model model, int n) {
  std::vector<int> psi;
  for (int i = 0; i < n; ++i) psi.push_back(2 * i);
  return pwe::build_matrix(model, pwe::make_uc(psi, {})).entries;
}

void BM_BareissLaguerre(benchmark::State& state) {
  const auto mat = staircase(pwe::Model::laguerre, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pwe::determinant(mat));
}
BENCHMARK(BM_BareissLaguerre)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_BareissJacobi(benchmark::State& state) {
  const auto mat = staircase(pwe::Model::jacobi, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pwe::determinant(mat));
}
BENCHMARK(BM_BareissJacobi)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_LaplaceLaguerre(benchmark::State& state) {
  const auto mat = staircase(pwe::Model::laguerre, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pwe::laplace_determinant(mat));
}
BENCHMARK(BM_LaplaceLaguerre)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
