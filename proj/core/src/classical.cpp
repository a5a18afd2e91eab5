#include "pwe/classical.hpp"

#include "pwe/errors.hpp"

namespace pwe {

std::string to_string(Model m) { return m == Model::laguerre ? "laguerre" : "jacobi"; }

Model model_from_string(const std::string& s) {
  if (s == "laguerre") return Model::laguerre;
  if (s == "jacobi") return Model::jacobi;
  throw ParseError("unknown model '" + s + "'");
}

std::string to_string(const SeedSpec& s) {
  return std::string(s.family == Family::psi ? "psi" : "phi") + "_" + std::to_string(s.index);
}

namespace {

const ParamPoly& alpha() {
  static const ParamPoly a = ParamPoly::var(Sym::alpha);
  return a;
}

const ParamPoly& beta() {
  static const ParamPoly b = ParamPoly::var(Sym::beta);
  return b;
}

void check_degree(int n) {
  if (n < 0) throw InvalidDegree("polynomial degree must be non-negative, got " + std::to_string(n));
}

}  // namespace

ZPoly laguerre_poly(int n, const ParamPoly& a, int arg_sign) {
  check_degree(n);
  // Coefficient of z^k: (-sign)^k / (k! (n-k)!) * prod_{j=k+1}^{n} (a + j).
  std::vector<RatFunc> coeffs(static_cast<std::size_t>(n) + 1);
  ParamPoly tail(1);
  for (int k = n; k >= 0; --k) {
    BigRational scale(1, factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - k)));
    scale.canonicalize();
    if (arg_sign > 0 && k % 2 == 1) scale = -scale;
    coeffs[k] = RatFunc(tail * scale);
    if (k > 0) tail *= a + ParamPoly(k);
  }
  return ZPoly(std::move(coeffs));
}

ZPoly jacobi_poly(int n, const ParamPoly& a, const ParamPoly& b, int arg_sign) {
  check_degree(n);
  // sum_k (a+k+1)_{n-k} (n+a+b+1)_k / (k!(n-k)!) ((z-1)/2)^k
  const ZPoly half_zm1 = ZPoly::linear(BigRational(-1, 2), BigRational(1, 2));
  ZPoly out;
  ZPoly power(1);
  for (int k = 0; k <= n; ++k) {
    BigRational scale(1, factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - k)));
    scale.canonicalize();
    const ParamPoly c = pochhammer(a + ParamPoly(k + 1), n - k, Pochhammer::rising) *
                        pochhammer(a + b + ParamPoly(n + 1), k, Pochhammer::rising) * scale;
    out += power * RatFunc(c);
    power = power * half_zm1;
  }
  return arg_sign < 0 ? out.reflected() : out;
}

ZPoly laguerre(int n, int alpha_shift, int arg_sign, bool negate_alpha) {
  return laguerre_poly(n, (negate_alpha ? -alpha() : alpha()) + ParamPoly(alpha_shift), arg_sign);
}

ZPoly jacobi(int n, int alpha_shift, int beta_shift, int arg_sign, bool negate_alpha, bool negate_beta) {
  return jacobi_poly(n, (negate_alpha ? -alpha() : alpha()) + ParamPoly(alpha_shift),
                     (negate_beta ? -beta() : beta()) + ParamPoly(beta_shift), arg_sign);
}

GaugeFunction seed(const SeedSpec& spec) {
  const int n = spec.degree();
  const bool negative = spec.index < 0;
  const bool psi = spec.family == Family::psi;
  // (+-alpha + 1/2)/2
  auto half_exp = [](bool minus, Sym s) {
    const BigRational c = minus ? BigRational(-1, 2) : BigRational(1, 2);
    return s == Sym::alpha ? Exponent{c, 0, BigRational(1, 4)} : Exponent{0, c, BigRational(1, 4)};
  };
  GaugeFunction g;
  if (spec.model == Model::laguerre) {
    // psi_n: +alpha, e^{-z/2}, L^{alpha}(z); conjugate flips both signs and z.
    // phi_n: -alpha, e^{-z/2}, L^{-alpha}(z); conjugate shadow: +alpha, e^{z/2}, L^{alpha}(-z).
    const bool minus_alpha = psi ? negative : !negative;
    g.e_z = negative ? BigRational(1, 2) : BigRational(-1, 2);
    g.exponent(Base::z) = half_exp(minus_alpha, Sym::alpha);
    g.num = laguerre(n, 0, negative ? -1 : 1, minus_alpha);
  } else {
    bool minus_alpha = false;
    bool minus_beta = false;
    if (psi) {
      minus_alpha = minus_beta = negative;
    } else {
      minus_alpha = !negative;
      minus_beta = negative;
    }
    g.exponent(Base::one_minus_z) = half_exp(minus_alpha, Sym::alpha);
    g.exponent(Base::one_plus_z) = half_exp(minus_beta, Sym::beta);
    g.num = jacobi(n, 0, 0, 1, minus_alpha, minus_beta);
  }
  return g;
}

ParamPoly energy(const SeedSpec& spec) {
  const ParamPoly nu = spec.family == Family::psi ? ParamPoly(spec.index) : ParamPoly(spec.index) - alpha();
  if (spec.model == Model::laguerre) return nu * ParamPoly::var(Sym::omega) * BigRational(2);
  // 4 nu (alpha + beta + 1 + nu)
  return nu * (alpha() + beta() + ParamPoly(1) + nu) * BigRational(4);
}

namespace {

GaugeFunction negate_symbol(const GaugeFunction& g, Sym s) {
  GaugeFunction r = g;
  for (auto& e : r.e_pow) {
    if (s == Sym::alpha) e.a = -e.a;
    if (s == Sym::beta) e.b = -e.b;
  }
  r.num = g.num.negated(s);
  r.den = g.den.negated(s);
  return r;
}

}  // namespace

GaugeFunction gamma1(Model model, const GaugeFunction& g) {
  if (model == Model::jacobi) return negate_symbol(g, Sym::beta);
  // omega -> -omega sends z to -z; the constant phase of the power of z is dropped.
  GaugeFunction r = g;
  r.e_z = -g.e_z;
  r.num = g.num.reflected();
  r.den = g.den.reflected();
  return r;
}

GaugeFunction gamma2(Model, const GaugeFunction& g) { return negate_symbol(g, Sym::alpha); }

GaugeFunction gamma3(Model model, const GaugeFunction& g) { return gamma1(model, gamma2(model, g)); }

GaugeFunction shift_params(const GaugeFunction& g, int alpha_shift, int beta_shift) {
  GaugeFunction r = g;
  for (auto& e : r.e_pow) e.q += e.a * alpha_shift + e.b * beta_shift;
  r.num = g.num.shifted(Sym::alpha, alpha_shift).shifted(Sym::beta, beta_shift);
  r.den = g.den.shifted(Sym::alpha, alpha_shift).shifted(Sym::beta, beta_shift);
  return r;
}

}  // namespace pwe

namespace pwe {

namespace {

GaugeFunction dressed(ZPoly p, BigRational e_z, Exponent e0, Exponent e1 = {}, Exponent e2 = {}) {
  GaugeFunction g;
  g.e_z = std::move(e_z);
  g.e_pow = {std::move(e0), std::move(e1), std::move(e2)};
  g.num = std::move(p);
  return g;
}

GaugeFunction scaled(GaugeFunction g, const ParamPoly& c) {
  g.num = g.num * RatFunc(c);
  return g;
}

GaugeFunction nth_derivative(GaugeFunction g, int k) {
  for (int i = 0; i < k; ++i) g = derivative(g);
  return g;
}

// Each case yields (function, expected k-th derivative).
std::pair<GaugeFunction, GaugeFunction> laguerre_case(int which, int n, int k) {
  const Exponent minus_a{-1, 0, 0};
  const Exponent minus_a_k{-1, 0, -k};
  switch (which) {
    case 0: {
      const ZPoly d = n >= k ? laguerre(n - k, k, 1) * RatFunc(k % 2 ? -1 : 1) : ZPoly();
      return {dressed(laguerre(n, 0, 1), 0, {}), dressed(d, 0, {})};
    }
    case 1:
      return {dressed(laguerre(n, 0, -1, true), 1, minus_a),
              scaled(dressed(laguerre(n + k, -k, -1, true), 1, minus_a_k),
                     pochhammer(ParamPoly(n + 1), k, Pochhammer::rising))};
    case 2:
      return {dressed(laguerre(n, 0, 1, true), 0, minus_a),
              scaled(dressed(laguerre(n, -k, 1, true), 0, minus_a_k),
                     pochhammer(ParamPoly(n) - ParamPoly::var(Sym::alpha), k, Pochhammer::falling))};
    default:
      return {dressed(laguerre(n, 0, -1), 1, {}), dressed(laguerre(n, k, -1), 1, {})};
  }
}

std::pair<GaugeFunction, GaugeFunction> jacobi_case(int which, int n, int k) {
  const ParamPoly a = ParamPoly::var(Sym::alpha);
  const ParamPoly b = ParamPoly::var(Sym::beta);
  const Exponent ea{1, 0, 0};
  const Exponent eb{0, 1, 0};
  const Exponent ea_k{1, 0, -k};
  const Exponent eb_k{0, 1, -k};
  const BigRational sign = k % 2 ? -1 : 1;
  switch (which) {
    case 0: {
      BigRational half(1, 1);
      for (int i = 0; i < k; ++i) half /= 2;
      const ZPoly d = n >= k ? jacobi(n - k, k, k, 1) *
                                   RatFunc(pochhammer(a + b + ParamPoly(n + 1), k, Pochhammer::rising) * half)
                             : ZPoly();
      return {dressed(jacobi(n, 0, 0, 1), 0, {}), dressed(d, 0, {})};
    }
    case 1: {
      BigRational two(1, 1);
      for (int i = 0; i < k; ++i) two *= -2;
      return {dressed(jacobi(n, 0, 0, 1), 0, {}, ea, eb),
              scaled(dressed(jacobi(n + k, -k, -k, 1), 0, {}, ea_k, eb_k),
                     pochhammer(ParamPoly(n + 1), k, Pochhammer::rising) * two)};
    }
    case 2:
      return {dressed(jacobi(n, 0, 0, 1), 0, {}, ea),
              scaled(dressed(jacobi(n, -k, k, 1), 0, {}, ea_k),
                     pochhammer(a + ParamPoly(n), k, Pochhammer::falling) * sign)};
    default:
      return {dressed(jacobi(n, 0, 0, 1), 0, {}, {}, eb),
              scaled(dressed(jacobi(n, k, -k, 1), 0, {}, {}, eb_k),
                     pochhammer(b + ParamPoly(n), k, Pochhammer::falling))};
  }
}

bool same(const GaugeFunction& f, const GaugeFunction& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return gauge_equal(f, g);
}

}  // namespace

std::vector<IdentityCheck> derivative_identities(int n_max, int k_max) {
  static const char* const names[] = {"eigen", "conjugate", "shadow", "conjugate_shadow"};
  std::vector<IdentityCheck> out;
  for (Model model : {Model::laguerre, Model::jacobi}) {
    for (int which = 0; which < 4; ++which) {
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
          const auto [f, expected] = model == Model::laguerre ? laguerre_case(which, n, k) : jacobi_case(which, n, k);
          out.push_back({model, names[which], n, k, same(nth_derivative(f, k), expected)});
        }
      }
    }
  }
  return out;
}

}  // namespace pwe
