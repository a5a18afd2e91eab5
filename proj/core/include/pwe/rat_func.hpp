#pragma once

#include <string>

#include "pwe/param_poly.hpp"

namespace pwe {

// Element of Q(alpha, beta, omega) kept reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  RatFunc shifted(Sym s, const BigRational& by) const;
  RatFunc negated(Sym s) const;
  BigRational evaluate(const BigRational& alpha, const BigRational& beta, const BigRational& omega) const;

  // "p" for polynomials, "(p)/(q)" otherwise.
  std::string str() const;

 private:
  struct NoReduce {};
  RatFunc(ParamPoly num, ParamPoly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();
  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace pwe
