#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pwe/param_poly.hpp"

namespace pwe {

// Sparse polynomial in (z, alpha, beta, omega) with integer coefficients.
// Used as the common ground for the determinant routes.
class IntPoly {
 public:
  struct Term {
    std::uint64_t key;  // z:16 | alpha:16 | beta:16 | omega:16
    BigInt coef;
    bool operator==(const Term& o) const { return key == o.key && coef == o.coef; }
  };

  static std::uint64_t pack(unsigned z, unsigned a, unsigned b, unsigned w);
  static std::array<unsigned, 4> unpack(std::uint64_t key);

  IntPoly() = default;
  static IntPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Maximum exponent of variable v (0 = z, 1 = alpha, 2 = beta, 3 = omega); -1 if zero.
  int degree(int v) const;
  // Sum of absolute values of the coefficients.
  BigInt norm1() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // sorted by key, descending
};

}  // namespace pwe
