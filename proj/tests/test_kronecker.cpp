#include <doctest.h>

#include <random>

#include "kronecker.hpp"
#include "printers.hpp"
#include "pwe/errors.hpp"

using namespace pwe;

namespace {

ParamPoly random_param(std::mt19937& rng, unsigned degree, int spread) {
  std::uniform_int_distribution<int> coef(-spread, spread);
  std::uniform_int_distribution<unsigned> den(1, 4);
  std::vector<ParamPoly::Term> terms;
  for (unsigned a = 0; a <= degree; ++a) {
    for (unsigned b = 0; a + b <= degree; ++b) {
      for (unsigned w = 0; a + b + w <= degree; ++w) {
        if (rng() % 3 == 0) terms.push_back({Monomial{a, b, w}.key(), BigRational(coef(rng), den(rng))});
      }
    }
  }
  return ParamPoly::from_terms(std::move(terms));
}

ZPoly random_zpoly(std::mt19937& rng, int degree, unsigned param_degree, int spread) {
  std::vector<RatFunc> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(random_param(rng, param_degree, spread));
  return ZPoly(std::move(c));
}

// Schoolbook product, coefficient by coefficient.
ZPoly schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<RatFunc> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  }
  return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("pack and unpack are inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const ZPoly p = random_zpoly(rng, 4, 3, 1000);
    BigInt scale;
    const IntPoly ip = kronecker::to_int_poly(p, scale);
    CHECK(kronecker::from_int_poly(ip, scale) == p);
    const kronecker::Packing pk({5, 4, 4, 4}, 80);
    CHECK(kronecker::unpack(kronecker::pack(ip, pk), pk) == ip);
  }
}

TEST_CASE("pack refuses what does not fit") {
  const ZPoly p = ZPoly::monomial(5, RatFunc(3));
  BigInt scale;
  const IntPoly ip = kronecker::to_int_poly(p, scale);
  CHECK_THROWS(kronecker::pack(ip, kronecker::Packing({5, 1, 1, 1}, 8)));
  const ZPoly big(RatFunc(BigRational(BigInt(1) << 200)));
  const IntPoly ib = kronecker::to_int_poly(big, scale);
  CHECK_THROWS(kronecker::pack(ib, kronecker::Packing({1, 1, 1, 1}, 16)));
}

TEST_CASE("packed product equals the schoolbook product") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const ZPoly a = random_zpoly(rng, static_cast<int>(rng() % 7), rng() % 4, trial % 2 ? 5 : 1 << 20);
    const ZPoly b = random_zpoly(rng, static_cast<int>(rng() % 7), rng() % 4, 7);
    CHECK(kronecker::multiply(a, b) == schoolbook(a, b));
  }
  CHECK(kronecker::multiply(ZPoly(), ZPoly::z()).is_zero());
  // Negative coefficients in every slot exercise the balanced digits.
  const ZPoly neg(std::vector<RatFunc>{RatFunc(-1), RatFunc(-1), RatFunc(-1)});
  CHECK(kronecker::multiply(neg, neg) == schoolbook(neg, neg));
}

TEST_CASE("vanishes decides polynomial identities") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const ZPoly a = random_zpoly(rng, 3, 2, 50);
    const ZPoly b = random_zpoly(rng, 4, 2, 50);
    const ZPoly c = random_zpoly(rng, 2, 1, 50);
    const ZPoly ab = schoolbook(a, b);
    const ZPoly abc = schoolbook(ab, c);
    // a b c - (ab) c = 0, and 2 a b - ab - ab = 0
    CHECK(kronecker::vanishes({{1, {&a, &b, &c}}, {-1, {&ab, &c}}}));
    CHECK(kronecker::vanishes({{2, {&a, &b}}, {-1, {&ab}}, {-1, {&ab}}}));
    if (!abc.is_zero()) CHECK_FALSE(kronecker::vanishes({{1, {&a, &b, &c}}, {BigRational(-1, 2), {&abc}}}));
  }
}
