#pragma once

#include <string>
#include <vector>

#include "pwe/rat_func.hpp"

namespace pwe {

// Dense polynomial in z with RatFunc coefficients; coeffs()[i] multiplies z^i.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  ZPoly(long c) : ZPoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  explicit ZPoly(std::vector<RatFunc> coeffs);

  static ZPoly z();
  static ZPoly monomial(int power, const RatFunc& c = RatFunc(1));
  // a + b*z
  static ZPoly linear(const RatFunc& a, const RatFunc& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  RatFunc coeff(int i) const;
  const RatFunc& leading() const { return c_.back(); }
  // True when every coefficient is a polynomial in the parameters.
  bool has_polynomial_coeffs() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const RatFunc& c);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const RatFunc& c) { return a *= c; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly pow(unsigned e) const;
  ZPoly derivative() const;
  ZPoly reflected() const;  // z -> -z
  ZPoly shifted(Sym s, const BigRational& by) const;
  ZPoly negated(Sym s) const;
  RatFunc evaluate(const RatFunc& z) const;

  // Multiplicity of the root z = 0 (lowest nonzero power).
  int order_at_zero() const;
  // Strip z^k with k = order_at_zero().
  ZPoly without_zero_root() const;
  // Divide by (z - point) for point in {1, -1}; requires zero remainder.
  ZPoly divide_linear(int point) const;
  // Multiplicity of the root z = point, point in {1, -1}.
  int multiplicity(int point) const;

  // Descending powers, each coefficient parenthesized: "(1)*z^2 + (-alpha - 1)*z + (alpha)".
  // A constant prints bare, e.g. "1".
  std::string str() const;

 private:
  void trim();
  std::vector<RatFunc> c_;
};

}  // namespace pwe
