#include "pwe/gauge.hpp"

#include <sstream>

#include "pwe/determinant.hpp"
#include "pwe/errors.hpp"

namespace pwe {

ZPoly base_poly(Base b) {
  switch (b) {
    case Base::z: return ZPoly::z();
    case Base::one_minus_z: return ZPoly::linear(1, -1);
    case Base::one_plus_z: return ZPoly::linear(1, 1);
  }
  return {};
}

const char* base_name(Base b) {
  switch (b) {
    case Base::z: return "z";
    case Base::one_minus_z: return "1-z";
    case Base::one_plus_z: return "1+z";
  }
  return "?";
}

namespace {

// Sign of d/dz log(base) * base.
long log_derivative_sign(Base b) { return b == Base::one_minus_z ? -1 : 1; }

struct CommonBases {
  std::array<bool, 3> present{};
  ZPoly q{1};

  ZPoly without(Base b) const {
    ZPoly r(1);
    for (Base o : kAllBases) {
      if (o != b && present[static_cast<int>(o)]) r = r * base_poly(o);
    }
    return r;
  }
};

CommonBases bases_of(const std::vector<const GaugeFunction*>& gs) {
  CommonBases cb;
  for (const auto* g : gs) {
    for (Base b : kAllBases) {
      if (!g->exponent(b).is_zero()) cb.present[static_cast<int>(b)] = true;
    }
  }
  for (Base b : kAllBases) {
    if (cb.present[static_cast<int>(b)]) cb.q = cb.q * base_poly(b);
  }
  return cb;
}

// Numerator of the gauge log-derivative over the denominator cb.q.
ZPoly log_derivative_numerator(const GaugeFunction& g, const CommonBases& cb) {
  ZPoly num = cb.q * RatFunc(g.e_z);
  for (Base b : kAllBases) {
    const Exponent& e = g.exponent(b);
    if (e.is_zero()) continue;
    num += cb.without(b) * RatFunc(e.poly() * BigRational(log_derivative_sign(b)));
  }
  return num;
}

}  // namespace

GaugeFunction operator*(const GaugeFunction& f, const GaugeFunction& g) {
  GaugeFunction r;
  r.e_z = f.e_z + g.e_z;
  for (int i = 0; i < 3; ++i) r.e_pow[i] = f.e_pow[i] + g.e_pow[i];
  r.num = f.num * g.num;
  r.den = f.den * g.den;
  return r;
}

RationalZ gauge_log_derivative(const GaugeFunction& g) {
  const CommonBases cb = bases_of({&g});
  return {log_derivative_numerator(g, cb), cb.q};
}

GaugeFunction derivative(const GaugeFunction& g) {
  const CommonBases cb = bases_of({&g});
  const ZPoly ln = log_derivative_numerator(g, cb);
  GaugeFunction r = g;
  if (g.den.is_constant()) {
    r.num = g.num.derivative() * cb.q + g.num * ln;
    r.den = g.den * cb.q;
  } else {
    r.num = (g.num.derivative() * g.den - g.num * g.den.derivative()) * cb.q + g.num * ln * g.den;
    r.den = g.den * g.den * cb.q;
  }
  return r;
}

GaugeFunction gauge_wronskian(const std::vector<GaugeFunction>& seeds) {
  if (seeds.empty()) throw ShapeError("Wronskian of an empty seed list");
  const std::size_t m = seeds.size();
  std::vector<const GaugeFunction*> ptrs;
  for (const auto& s : seeds) ptrs.push_back(&s);
  const CommonBases cb = bases_of(ptrs);
  const ZPoly dq = cb.q.derivative();

  // Row i, column j holds N_ij * D_i^(m-1-j) where the j-th derivative of the
  // rational part is N_ij / (D_i^(j+1) Q^j).
  ZMatrix mat(m, std::vector<ZPoly>(m));
  GaugeFunction out;
  out.num = ZPoly(1);
  for (std::size_t i = 0; i < m; ++i) {
    const GaugeFunction& s = seeds[i];
    const ZPoly ln = log_derivative_numerator(s, cb);
    const ZPoly& d = s.den;
    const ZPoly dd = d.derivative();
    const bool plain = d.is_constant();
    std::vector<ZPoly> dpow(m, ZPoly(1));
    for (std::size_t k = 1; k < m; ++k) dpow[k] = dpow[k - 1] * d;
    ZPoly n = s.num;
    for (std::size_t j = 0; j < m; ++j) {
      mat[i][j] = plain ? n : n * dpow[m - 1 - j];
      if (j + 1 == m) break;
      const RatFunc jj(static_cast<long>(j));
      if (plain) {
        n = n.derivative() * cb.q - n * dq * jj + n * ln;
      } else {
        const RatFunc j1(static_cast<long>(j + 1));
        n = n.derivative() * d * cb.q - n * (dd * cb.q * j1 + d * dq * jj) + n * ln * d;
      }
    }
    out.e_z += s.e_z;
    for (int b = 0; b < 3; ++b) out.e_pow[b] = out.e_pow[b] + s.e_pow[b];
    out.den = out.den * d.pow(static_cast<unsigned>(m));
  }
  out.num = determinant(mat);
  out.den = out.den * cb.q.pow(static_cast<unsigned>(m * (m - 1) / 2));
  return out;
}

bool gauge_equal(const GaugeFunction& f, const GaugeFunction& g) {
  if (f.e_z != g.e_z) return f.is_zero() && g.is_zero();
  ZPoly lhs = f.num * g.den;
  ZPoly rhs = g.num * f.den;
  for (Base b : kAllBases) {
    const Exponent diff = f.exponent(b) - g.exponent(b);
    if (!diff.is_integer_constant()) return f.is_zero() && g.is_zero();
    const long k = diff.q.get_num().get_si();
    if (k > 0) lhs = lhs * base_poly(b).pow(static_cast<unsigned>(k));
    if (k < 0) rhs = rhs * base_poly(b).pow(static_cast<unsigned>(-k));
  }
  return lhs == rhs;
}

std::string to_string(const GaugeFunction& g) {
  std::ostringstream os;
  if (g.e_z != 0) os << "e^(" << rational_display(g.e_z) << "*z) * ";
  for (Base b : kAllBases) {
    const Exponent& e = g.exponent(b);
    if (!e.is_zero()) os << '(' << base_name(b) << ")^(" << e.poly().str() << ") * ";
  }
  os << '[' << g.num.str() << ']';
  if (!(g.den == ZPoly(1))) os << " / [" << g.den.str() << ']';
  return os.str();
}

}  // namespace pwe
