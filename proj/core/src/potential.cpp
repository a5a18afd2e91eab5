#include <algorithm>

#include "kronecker.hpp"
#include "pwe/errors.hpp"
#include "pwe/pseudowronskian.hpp"

namespace pwe {

namespace {

RatFunc rf(const ParamPoly& p) { return RatFunc(p); }

const ParamPoly& alpha() {
  static const ParamPoly a = ParamPoly::var(Sym::alpha);
  return a;
}

const ParamPoly& beta() {
  static const ParamPoly b = ParamPoly::var(Sym::beta);
  return b;
}

const ParamPoly& omega() {
  static const ParamPoly w = ParamPoly::var(Sym::omega);
  return w;
}

}  // namespace

ZPoly base_potential_num(Model model) {
  if (model == Model::laguerre) {
    // omega z/2 + (alpha^2 - 1/4) omega / (2z) - omega (alpha + 1), times z
    const ParamPoly c0 = (alpha() * alpha() - ParamPoly(BigRational(1, 4))) * omega() * BigRational(1, 2);
    const ParamPoly c1 = -(omega() * (alpha() + ParamPoly(1)));
    const ParamPoly c2 = omega() * BigRational(1, 2);
    return ZPoly(std::vector<RatFunc>{rf(c0), rf(c1), rf(c2)});
  }
  // 2(alpha^2-1/4)/(1-z) + 2(beta^2-1/4)/(1+z) - (alpha+beta+1)^2, times (1-z^2)
  const ParamPoly a2 = (alpha() * alpha() - ParamPoly(BigRational(1, 4))) * BigRational(2);
  const ParamPoly b2 = (beta() * beta() - ParamPoly(BigRational(1, 4))) * BigRational(2);
  const ParamPoly s2 = (alpha() + beta() + ParamPoly(1)).pow(2);
  return ZPoly::linear(rf(a2), rf(a2)) + ZPoly::linear(rf(b2), rf(-b2)) -
         ZPoly(std::vector<RatFunc>{rf(s2), RatFunc(), rf(-s2)});
}

ZPoly base_potential_den(Model model) {
  if (model == Model::laguerre) return ZPoly::z();
  return ZPoly(std::vector<RatFunc>{RatFunc(1), RatFunc(), RatFunc(-1)});
}

namespace {

ZPoly shifted_poly(const ZPoly& p, int alpha_shift, int beta_shift) {
  return p.shifted(Sym::alpha, alpha_shift).shifted(Sym::beta, beta_shift);
}

// V0 - 2 (d/dx)^2 log(g * p), with p and g already at the target parameters
// and V0 shifted by (alpha_shift, beta_shift).
PotentialExpr build_potential(Model model, const UniversalCharacter& uc, const ZPoly& p, GaugeFunction g,
                              int alpha_shift, int beta_shift) {
  if (p.is_zero()) throw ZeroPolynomial("vanishing pseudo-Wronskian for " + to_string(uc));
  const int size = uc.m() + uc.r();
  // The x -> z Jacobian adds (dz/dx)^{M(M-1)/2}, i.e. z^{M(M-1)/4} or
  // ((1-z)(1+z))^{M(M-1)/4}.
  const BigRational jac(size * (size - 1), 4);
  if (model == Model::laguerre) {
    g.exponent(Base::z).q += jac;
  } else {
    g.exponent(Base::one_minus_z).q += jac;
    g.exponent(Base::one_plus_z).q += jac;
  }
  const RationalZ lg = gauge_log_derivative(g);
  const ZPoly& ln = lg.num;
  const ZPoly& q = lg.den;
  const ZPoly p1 = p.derivative();
  const ZPoly p2 = p1.derivative();
  const ZPoly p_sq = p * p;
  const ZPoly q_sq = q * q;
  // l' = (ln p + q p') / (q p),  l'' = ((ln' q - ln q') p^2 + q^2 (p'' p - p'^2)) / (q^2 p^2)
  const ZPoly d1_num = (ln * p + q * p1) * q * p;  // over q^2 p^2
  const ZPoly d2_num = (ln.derivative() * q - ln * q.derivative()) * p_sq + q_sq * (p2 * p - p1 * p1);
  const ZPoly t_den = q_sq * p_sq;
  ZPoly t_num;
  if (model == Model::laguerre) {
    // (d/dx)^2 = 2 omega z f'' + omega f'
    t_num = ZPoly::monomial(1, rf(omega() * BigRational(2))) * d2_num + d1_num * rf(omega());
  } else {
    // (d/dx)^2 = 4 (1-z^2) f'' - 4 z f'
    t_num = ZPoly(std::vector<RatFunc>{RatFunc(4), RatFunc(), RatFunc(-4)}) * d2_num +
            ZPoly::monomial(1, RatFunc(-4)) * d1_num;
  }
  PotentialExpr v;
  v.model = model;
  v.uc = uc;
  const ZPoly vn = shifted_poly(base_potential_num(model), alpha_shift, beta_shift);
  const ZPoly vd = base_potential_den(model);
  v.num = vn * t_den - t_num * vd * RatFunc(2);
  v.den = vd * t_den;
  return v;
}

}  // namespace

PotentialExpr extended_potential(Model model, const UniversalCharacter& uc) {
  return build_potential(model, uc, pseudo_wronskian(model, uc), matrix_gauge(model, uc), 0, 0);
}

PotentialExpr shift_params(const PotentialExpr& v, int alpha_shift, int beta_shift) {
  PotentialExpr r = v;
  r.num = v.num.shifted(Sym::alpha, alpha_shift).shifted(Sym::beta, beta_shift);
  r.den = v.den.shifted(Sym::alpha, alpha_shift).shifted(Sym::beta, beta_shift);
  return r;
}

bool differs_by_constant(const PotentialExpr& a, const PotentialExpr& b, const ParamPoly& c) {
  const ZPoly zc{RatFunc(c)};
  const std::vector<const ZPoly*> all{&a.num, &a.den, &b.num, &b.den};
  if (std::all_of(all.begin(), all.end(), [](const ZPoly* p) { return p->has_polynomial_coeffs(); })) {
    // a.num b.den - b.num a.den - c a.den b.den == 0
    return kronecker::vanishes({{1, {&a.num, &b.den}}, {-1, {&b.num, &a.den}}, {-1, {&a.den, &b.den, &zc}}});
  }
  return a.num * b.den - b.num * a.den == a.den * b.den * zc;
}

PotentialReport verify_potential_equivalence(Model model, const UniversalCharacter& uc, int bound) {
  const int size = uc.m() + uc.r();
  if (size > bound) {
    throw ShapeError("potential check limited to " + std::to_string(bound) + " seeds, got " + std::to_string(size));
  }
  const Canonical canon = canonicalize(model, uc);
  PotentialReport rep;
  rep.model = model;
  rep.uc = uc;
  rep.canonical = canon.uc;
  rep.alpha_shift = canon.alpha_shift;
  rep.beta_shift = canon.beta_shift;
  rep.energy_shift = energy(model, Family::psi, -flat_shift(uc.psi));
  const PotentialExpr v = extended_potential(model, uc);
  // Shifting pw before differentiating is cheaper than shifting the finished expression.
  const ZPoly pc = shifted_poly(pseudo_wronskian(model, canon.uc), canon.alpha_shift, canon.beta_shift);
  const GaugeFunction gc = shift_params(matrix_gauge(model, canon.uc), canon.alpha_shift, canon.beta_shift);
  const PotentialExpr w = build_potential(model, canon.uc, pc, gc, canon.alpha_shift, canon.beta_shift);
  if (!differs_by_constant(v, w, rep.energy_shift)) {
    throw PotentialMismatch("extended potential of " + to_string(uc) +
                            " does not equal the canonical one plus " + rep.energy_shift.str());
  }
  rep.verified = true;
  return rep;
}

}  // namespace pwe
