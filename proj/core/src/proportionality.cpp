#include "pwe/proportionality.hpp"

#include "kronecker.hpp"
#include "pwe/errors.hpp"

namespace pwe {

namespace {

// Removes the factor (z - point)^k and returns k.
int strip_root(ZPoly& p, int point) {
  int k = 0;
  while (p.degree() > 0 && p.evaluate(RatFunc(point)).is_zero()) {
    p = p.divide_linear(point);
    ++k;
  }
  return k;
}

bool listed(const std::vector<Base>& bases, Base b) {
  for (Base x : bases) {
    if (x == b) return true;
  }
  return false;
}

}  // namespace

std::optional<Proportionality> proportionality_factor(const ZPoly& p, const ZPoly& q,
                                                      const std::vector<Base>& bases) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("proportionality with a zero polynomial");
  ZPoly a = p;
  ZPoly b = q;
  Proportionality res;
  if (listed(bases, Base::z)) {
    const int ea = a.order_at_zero();
    const int eb = b.order_at_zero();
    a = a.without_zero_root();
    b = b.without_zero_root();
    res.exps[static_cast<int>(Base::z)] = ea - eb;
  }
  bool flip = false;
  if (listed(bases, Base::one_minus_z)) {
    const int e = strip_root(a, 1) - strip_root(b, 1);
    res.exps[static_cast<int>(Base::one_minus_z)] = e;
    flip = (e % 2) != 0;  // (z-1)^e = (-1)^e (1-z)^e
  }
  if (listed(bases, Base::one_plus_z)) {
    res.exps[static_cast<int>(Base::one_plus_z)] = strip_root(a, -1) - strip_root(b, -1);
  }
  if (a.degree() != b.degree()) return std::nullopt;
  const RatFunc& la = a.leading();
  const RatFunc& lb = b.leading();
  if (a.has_polynomial_coeffs() && b.has_polynomial_coeffs()) {
    const ZPoly za(la);
    const ZPoly zb(lb);
    if (!kronecker::vanishes({{1, {&a, &zb}}, {-1, {&b, &za}}})) return std::nullopt;
  } else {
    for (int i = 0; i <= a.degree(); ++i) {
      if (!(a.coeff(i) * lb == b.coeff(i) * la)) return std::nullopt;
    }
  }
  res.constant = la / lb;
  if (flip) res.constant = -res.constant;
  return res;
}

bool equal_up_to_monomial(const ZPoly& p, const ZPoly& q, const Proportionality& f) {
  // Cross-multiplied so no coefficient needs a gcd.
  ZPoly lhs_mono(1);
  ZPoly rhs_mono(1);
  for (Base b : kAllBases) {
    const int e = f.exponent(b);
    if (e > 0) rhs_mono = rhs_mono * base_poly(b).pow(static_cast<unsigned>(e));
    if (e < 0) lhs_mono = lhs_mono * base_poly(b).pow(static_cast<unsigned>(-e));
  }
  const ZPoly cd(RatFunc(f.constant.den()));
  const ZPoly cn(RatFunc(f.constant.num()));
  if (p.has_polynomial_coeffs() && q.has_polynomial_coeffs()) {
    return kronecker::vanishes({{1, {&p, &cd, &lhs_mono}}, {-1, {&q, &cn, &rhs_mono}}});
  }
  return p * cd * lhs_mono == q * cn * rhs_mono;
}

}  // namespace pwe
