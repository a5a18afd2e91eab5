#include <random>

#include <benchmark/benchmark.h>

#include "pwe/param_poly.hpp"

namespace {

pwe::ParamPoly random_poly(std::mt19937& rng, unsigned degree) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<pwe::ParamPoly::Term> terms;
  for (unsigned a = 0; a <= degree; ++a) {
    for (unsigned b = 0; a + b <= degree; ++b) {
      terms.push_back({pwe::Monomial{a, b, 0}.key(), pwe::BigRational(coef(rng))});
    }
  }
  return pwe::ParamPoly::from_terms(std::move(terms));
}

// gcd of x*c and y*c with a planted common factor c.
void BM_GcdPlanted(benchmark::State& state) {
  std::mt19937 rng(7);
  const auto degree = static_cast<unsigned>(state.range(0));
  const pwe::ParamPoly c = random_poly(rng, degree);
  const pwe::ParamPoly x = random_poly(rng, degree) * c;
  const pwe::ParamPoly y = random_poly(rng, degree) * c;
  for (auto _ : state) benchmark::DoNotOptimize(pwe::gcd(x, y));
}
BENCHMARK(BM_GcdPlanted)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
