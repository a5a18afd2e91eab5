#include <random>

#include "doctest.h"
#include "pwe/determinant.hpp"
#include "pwe/errors.hpp"
#include "pwe/gauge.hpp"
#include "pwe/proportionality.hpp"
#include "printers.hpp"

using namespace pwe;

namespace {

const ParamPoly a = ParamPoly::var(Sym::alpha);
const ParamPoly b = ParamPoly::var(Sym::beta);
const ParamPoly w = ParamPoly::var(Sym::omega);
const ZPoly z = ZPoly::z();

ParamPoly P(long c) { return ParamPoly(c); }

ParamPoly random_param(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<ParamPoly::Term> t;
  for (int i = 0; i < terms; ++i) {
    const Monomial m{static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng)), 0};
    t.push_back({m.key(), BigRational(coef(rng), 1 + (i % 3))});
  }
  return ParamPoly::from_terms(std::move(t));
}

ZPoly random_zpoly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> zero(0, 4);
  std::vector<RatFunc> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = zero(rng) == 0 ? RatFunc() : RatFunc(random_param(rng, 2, 3));
  return ZPoly(std::move(c));
}

ZMatrix random_matrix(std::mt19937& rng, int n) {
  ZMatrix m(static_cast<std::size_t>(n), std::vector<ZPoly>(static_cast<std::size_t>(n)));
  for (auto& row : m) {
    for (auto& e : row) e = random_zpoly(rng, 3);
  }
  return m;
}

}  // namespace

TEST_CASE("big rationals serialize as p/q") {
  CHECK(rational_to_string(BigRational(3)) == "3/1");
  CHECK(rational_to_string(BigRational(-6, 4)) == "-6/4");  // not canonical on purpose: input as given
  BigRational q(-6, 4);
  q.canonicalize();
  CHECK(rational_to_string(q) == "-3/2");
  CHECK(rational_from_string("-3/2") == q);
  CHECK(rational_from_string("7") == BigRational(7));
  CHECK(rational_from_string("4/8") == BigRational(1, 2));
  CHECK_THROWS_AS(rational_from_string("x"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
}

TEST_CASE("ParamPoly basics and monomial order") {
  const ParamPoly p = a * w + b * b + a + P(3);
  // Graded: degree 2 first; alpha*omega before beta^2 because alpha > beta.
  REQUIRE(p.size() == 4);
  CHECK(p.terms()[0].mono() == Monomial{1, 0, 1});
  CHECK(p.terms()[1].mono() == Monomial{0, 2, 0});
  CHECK(p.terms()[2].mono() == Monomial{1, 0, 0});
  CHECK(p.str() == "alpha*omega + beta^2 + alpha + 3");
  CHECK((p - p).is_zero());
  CHECK((a + P(1)) * (a - P(1)) == a * a - P(1));
  CHECK(((a + b).pow(3)).degree(Sym::alpha) == 3);
  CHECK((a * a).shifted(Sym::alpha, 2) == a * a + a * BigRational(4) + P(4));
  CHECK((a * b + a).negated(Sym::alpha) == -(a * b + a));
  CHECK((a * a * b).evaluate(2, 3, 0) == 12);
  CHECK((a * b + P(1)).substitute(Sym::beta, 2) == a * BigRational(2) + P(1));
}

TEST_CASE("ParamPoly exact division") {
  const ParamPoly f = (a + b + P(1)) * (a * a - b * w + P(2));
  CHECK(divide_exact(f, a + b + P(1)) == a * a - b * w + P(2));
  CHECK_FALSE(try_divide(f, a + P(5)).has_value());
  CHECK_THROWS_AS(divide_exact(a, a + P(1)), NotDivisible);
  CHECK_THROWS_AS(divide_exact(a, ParamPoly()), ZeroPolynomial);
}

TEST_CASE("ParamPoly gcd") {
  CHECK(gcd((a + P(1)) * (a - b), (a + P(1)) * (b + P(2))) == a + P(1));
  CHECK(gcd(a * a - P(1), a - P(1)) == a - P(1));
  CHECK(gcd(a * BigRational(6), a * a * BigRational(4)) == a);
  CHECK(gcd(ParamPoly(), b * BigRational(3) + P(3)) == b + P(1));
  CHECK(gcd(P(5), a) == P(1));
  CHECK(gcd(a * b, b * w) == b);
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const ParamPoly x = random_param(rng, 2, 3);
    const ParamPoly y = random_param(rng, 2, 3);
    const ParamPoly c = random_param(rng, 2, 2) + a;  // nonconstant
    if (x.is_zero() || y.is_zero()) continue;
    const ParamPoly g = gcd(x * c, y * c);
    CHECK(try_divide(g, c.monic()).has_value());
    CHECK(g == (gcd(x, y) * c).monic());
  }
}

TEST_CASE("RatFunc stays reduced") {
  const RatFunc r(a * a - P(1), (a - P(1)) * BigRational(2));
  CHECK(r.den() == P(1));
  CHECK(r.num() == (a + P(1)) * BigRational(1, 2));
  const RatFunc s = RatFunc(P(1)) / RatFunc(a + b);
  CHECK(s.den() == a + b);
  CHECK((s * RatFunc(a + b)) == RatFunc(1));
  CHECK((s + s).num() == P(2));
  CHECK((RatFunc(a) / RatFunc(b)).str() == "(alpha)/(beta)");
  CHECK(RatFunc(b, a * BigRational(-2)).den() == a);
  CHECK_THROWS_AS(RatFunc(a, ParamPoly()), ZeroPolynomial);
}

TEST_CASE("pochhammer symbols") {
  CHECK(pochhammer(a, 0, Pochhammer::rising) == P(1));
  CHECK(pochhammer(a + P(2), 4, Pochhammer::falling) == (a + P(2)) * (a + P(1)) * a * (a - P(1)));
  CHECK(pochhammer(P(3), 3, Pochhammer::rising) == P(60));
  CHECK_THROWS_AS(pochhammer(a, -1, Pochhammer::rising), InvalidDegree);
}

TEST_CASE("ZPoly calculus") {
  const ZPoly p = z * z * RatFunc(a) + z * RatFunc(3) + ZPoly(RatFunc(b));
  CHECK(p.derivative() == z * RatFunc(a * BigRational(2)) + ZPoly(3));
  CHECK(p.reflected() == z * z * RatFunc(a) - z * RatFunc(3) + ZPoly(RatFunc(b)));
  const ZPoly q = z.pow(3) * (z - ZPoly(1)).pow(2) * (z + ZPoly(1));
  CHECK(q.order_at_zero() == 3);
  CHECK(q.multiplicity(1) == 2);
  CHECK(q.multiplicity(-1) == 1);
  CHECK(q.divide_linear(-1) == z.pow(3) * (z - ZPoly(1)).pow(2));
  CHECK_THROWS_AS(z.divide_linear(1), NotDivisible);
  CHECK(ZPoly(1).str() == "1");
  CHECK(p.str() == "(alpha)*z^2 + (3)*z + (beta)");
}

TEST_CASE("determinant small cases") {
  CHECK(determinant(ZMatrix{}) == ZPoly(1));
  CHECK(determinant(ZMatrix{{z, ZPoly(1)}, {ZPoly(1), z}}) == z * z - ZPoly(1));
  CHECK_THROWS_AS(determinant(ZMatrix{{z, z}}), ShapeError);
  CHECK(determinant(ZMatrix{{z, z}, {z, z}}).is_zero());
  const ZMatrix halves{{ZPoly(RatFunc(BigRational(1, 2))), z}, {z * RatFunc(a), ZPoly(RatFunc(BigRational(1, 3)))}};
  CHECK(determinant(halves) == ZPoly(RatFunc(BigRational(1, 6))) - z * z * RatFunc(a));
}

TEST_CASE("rational-function entries are cleared and restored") {
  const RatFunc inv = RatFunc(1) / RatFunc(a + P(1));
  const ZMatrix m{{ZPoly(inv), z}, {ZPoly(1), ZPoly(RatFunc(a + P(1)))}};
  CHECK(determinant(m) == ZPoly(1) - z);
  CHECK(laplace_determinant(m) == ZPoly(1) - z);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 6; ++t) {
      const ZMatrix m = random_matrix(rng, n);
      CHECK(determinant(m) == laplace_determinant(m));
    }
  }
}

TEST_CASE("Bareiss handles huge and signed coefficients") {
  const BigRational big(BigInt("123456789012345678901234567890123456789"));
  const ZMatrix m{{ZPoly(RatFunc(big)), z * RatFunc(-big)},
                  {z * z * RatFunc(a * big - P(1)), ZPoly(RatFunc(-big * big))}};
  CHECK(determinant(m) == laplace_determinant(m));
  CHECK(determinant(m) == ZPoly(RatFunc(-big * big * big)) + z.pow(3) * RatFunc(a * big - P(1)) * RatFunc(big));
}

TEST_CASE("determinant is alternating") {
  std::mt19937 rng(99);
  for (int t = 0; t < 10; ++t) {
    ZMatrix m = random_matrix(rng, 4);
    const ZPoly d = determinant(m);
    std::swap(m[0], m[2]);
    CHECK(determinant(m) == -d);
  }
}

TEST_CASE("proportionality factor") {
  auto f = proportionality_factor(z.pow(3) * RatFunc(2), z, {Base::z});
  REQUIRE(f);
  CHECK(f->constant == RatFunc(2));
  CHECK(f->exponent(Base::z) == 2);

  const ZPoly q = z * z * RatFunc(a) + ZPoly(RatFunc(b + P(1)));
  f = proportionality_factor(q, q, {Base::z});
  REQUIRE(f);
  CHECK(f->constant == RatFunc(1));
  CHECK(f->exps == std::array<int, 3>{0, 0, 0});

  // (1-z)^2 (1+z)^-1 with a sign from converting (z-1).
  const ZPoly one_minus = base_poly(Base::one_minus_z);
  const ZPoly one_plus = base_poly(Base::one_plus_z);
  const ZPoly p1 = q * one_minus.pow(3) * RatFunc(a);
  const ZPoly q1 = q * one_minus * one_plus;
  f = proportionality_factor(p1, q1, {Base::one_minus_z, Base::one_plus_z});
  REQUIRE(f);
  CHECK(f->constant == RatFunc(a));
  CHECK(f->exponent(Base::one_minus_z) == 2);
  CHECK(f->exponent(Base::one_plus_z) == -1);
  CHECK(equal_up_to_monomial(p1, q1, *f));
  const auto g = proportionality_factor(q1, p1, {Base::one_minus_z, Base::one_plus_z});
  REQUIRE(g);
  CHECK(g->constant == f->constant.inverse());
  CHECK(g->exponent(Base::one_minus_z) == -2);
  CHECK(g->exponent(Base::one_plus_z) == 1);

  CHECK_FALSE(proportionality_factor(z + ZPoly(1), z + ZPoly(2), {Base::z}).has_value());
  CHECK_FALSE(proportionality_factor(z * z, ZPoly(1), {}).has_value());
  CHECK_THROWS_AS(proportionality_factor(ZPoly(), z, {Base::z}), ZeroPolynomial);
}

TEST_CASE("gauge log-derivative") {
  GaugeFunction g;
  g.exponent(Base::z) = Exponent{1, 0, 0};
  RationalZ l = gauge_log_derivative(g);
  CHECK(l.num == ZPoly(RatFunc(a)));
  CHECK(l.den == z);

  GaugeFunction e;
  e.e_z = BigRational(1, 2);
  l = gauge_log_derivative(e);
  CHECK(l.num == ZPoly(RatFunc(BigRational(1, 2))));
  CHECK(l.den == ZPoly(1));

  GaugeFunction psi0;
  psi0.e_z = BigRational(-1, 2);
  psi0.exponent(Base::z) = Exponent{BigRational(1, 2), 0, BigRational(1, 4)};
  l = gauge_log_derivative(psi0);
  // (alpha + 1/2)/(2z) - 1/2
  CHECK(l.num == ZPoly(RatFunc(a * BigRational(1, 2) + ParamPoly(BigRational(1, 4)))) - z * RatFunc(BigRational(1, 2)));
  CHECK(l.den == z);
}

TEST_CASE("gauge derivative closes the ring") {
  // d/dz [z^alpha (1-z)^beta] = z^alpha (1-z)^beta (alpha/z - beta/(1-z))
  GaugeFunction g;
  g.exponent(Base::z) = Exponent{1, 0, 0};
  g.exponent(Base::one_minus_z) = Exponent{0, 1, 0};
  GaugeFunction expected = g;
  expected.num = ZPoly(RatFunc(a)) * base_poly(Base::one_minus_z) - z * RatFunc(b);
  expected.den = z * base_poly(Base::one_minus_z);
  CHECK(gauge_equal(derivative(g), expected));
}

TEST_CASE("gauge Wronskian") {
  GaugeFunction f;
  f.e_z = BigRational(-1, 2);
  f.exponent(Base::z) = Exponent{BigRational(1, 2), 0, 0};
  f.num = z * z - z * RatFunc(a);
  CHECK(gauge_equal(gauge_wronskian({f}), f));
  CHECK(gauge_wronskian({f, f}).is_zero());

  GaugeFunction g;
  g.num = z + ZPoly(RatFunc(b));
  GaugeFunction h;
  h.exponent(Base::one_plus_z) = Exponent{1, 0, BigRational(1, 3)};
  h.num = z.pow(3);
  GaugeFunction u;
  u.e_z = 2;
  u.exponent(Base::z) = Exponent{0, 1, BigRational(-1, 2)};
  u.exponent(Base::one_minus_z) = Exponent{1, 0, 0};
  u.num = z + ZPoly(3);
  const GaugeFunction plain = gauge_wronskian({f, g, h});
  const GaugeFunction dressed = gauge_wronskian({u * f, u * g, u * h});
  CHECK(gauge_equal(dressed, u * u * u * plain));
  // W(1, z) = 1 for polynomial seeds without gauge.
  GaugeFunction one;
  GaugeFunction lin;
  lin.num = z;
  CHECK(gauge_equal(gauge_wronskian({one, lin}), one));
}
