#pragma once

#include <array>
#include <string>
#include <vector>

#include "pwe/zpoly.hpp"

namespace pwe {

enum class Base : int { z = 0, one_minus_z = 1, one_plus_z = 2 };
inline constexpr std::array<Base, 3> kAllBases{Base::z, Base::one_minus_z, Base::one_plus_z};

ZPoly base_poly(Base b);
const char* base_name(Base b);  // "z", "1-z", "1+z"

// a*alpha + b*beta + q, all exact.
struct Exponent {
  BigRational a = 0;
  BigRational b = 0;
  BigRational q = 0;

  bool is_zero() const { return a == 0 && b == 0 && q == 0; }
  bool is_integer_constant() const { return a == 0 && b == 0 && q.get_den() == 1; }
  ParamPoly poly() const { return ParamPoly::affine(a, b, q); }
  Exponent operator+(const Exponent& o) const { return {a + o.a, b + o.b, q + o.q}; }
  Exponent operator-(const Exponent& o) const { return {a - o.a, b - o.b, q - o.q}; }
  Exponent operator*(const BigRational& s) const { return {a * s, b * s, q * s}; }
  bool operator==(const Exponent&) const = default;
};

// Rational function of z: num / den.
struct RationalZ {
  ZPoly num;
  ZPoly den{1};
};

// e^{c z} * z^{e0} (1-z)^{e1} (1+z)^{e2} * num(z)/den(z).
struct GaugeFunction {
  BigRational e_z = 0;
  std::array<Exponent, 3> e_pow{};
  ZPoly num{1};
  ZPoly den{1};

  const Exponent& exponent(Base b) const { return e_pow[static_cast<int>(b)]; }
  Exponent& exponent(Base b) { return e_pow[static_cast<int>(b)]; }
  bool is_zero() const { return num.is_zero(); }
};

GaugeFunction operator*(const GaugeFunction& f, const GaugeFunction& g);

// d/dz log of the gauge part: c + e0/z - e1/(1-z) + e2/(1+z), over a common
// denominator made of the bases that actually occur.
RationalZ gauge_log_derivative(const GaugeFunction& g);

GaugeFunction derivative(const GaugeFunction& g);

// Wronskian with respect to z. The gauge of the result is the product of the
// seed gauges; the rational part is a determinant of polynomial rows.
GaugeFunction gauge_wronskian(const std::vector<GaugeFunction>& seeds);

// Exact equality; gauge exponents may differ by integers absorbed into the rational part.
bool gauge_equal(const GaugeFunction& f, const GaugeFunction& g);

std::string to_string(const GaugeFunction& g);

}  // namespace pwe
