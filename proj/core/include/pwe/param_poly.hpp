#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwe/rational.hpp"

namespace pwe {

enum class Sym : int { alpha = 0, beta = 1, omega = 2 };

// Exponent vector over (alpha, beta, omega), packed so that a plain integer
// comparison of keys is graded lexicographic order with alpha > beta > omega.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;
  unsigned w = 0;

  unsigned degree() const { return a + b + w; }
  unsigned exponent(Sym s) const;
  std::uint64_t key() const;
  static Monomial from_key(std::uint64_t key);
  bool divides(const Monomial& o) const { return a <= o.a && b <= o.b && w <= o.w; }
  auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in alpha, beta, omega over the rationals.
// Terms are kept sorted with the leading term first and no zero coefficients.
class ParamPoly {
 public:
  struct Term {
    std::uint64_t key;
    BigRational coef;
    Monomial mono() const { return Monomial::from_key(key); }
    bool operator==(const Term& o) const { return key == o.key && coef == o.coef; }
  };

  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT(google-explicit-constructor)
  ParamPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static ParamPoly var(Sym s);
  static ParamPoly monomial(const Monomial& m, const BigRational& c);
  // a*alpha + b*beta + q
  static ParamPoly affine(const BigRational& a, const BigRational& b, const BigRational& q);
  // Build from unsorted, possibly repeated terms.
  static ParamPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  BigRational constant_value() const;  // coefficient of the unit monomial
  const Term& leading() const { return terms_.front(); }
  const BigRational& leading_coef() const { return terms_.front().coef; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  int degree(Sym s) const;  // -1 for the zero polynomial
  int total_degree() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const BigRational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const BigRational& c) { return a *= c; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  ParamPoly pow(unsigned e) const;
  // Substitute s -> s + by.
  ParamPoly shifted(Sym s, const BigRational& by) const;
  // Substitute s -> -s.
  ParamPoly negated(Sym s) const;
  // Substitute s -> c (constant); the other symbols stay.
  ParamPoly substitute(Sym s, const BigRational& c) const;
  BigRational evaluate(const BigRational& alpha, const BigRational& beta, const BigRational& omega) const;

  // Least common multiple of coefficient denominators and gcd of numerators.
  BigInt denominator_lcm() const;
  BigRational content() const;  // positive rational c with this / c integral and primitive

  // Scale so the leading coefficient is 1.
  ParamPoly monic() const;

  // Human-readable form, e.g. "alpha^2 - 1/2*alpha*beta + 3".
  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Exact division; nullopt when b does not divide a.
std::optional<ParamPoly> try_divide(const ParamPoly& a, const ParamPoly& b);
// Exact division; throws NotDivisible.
ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);

// Monic greatest common divisor (zero only when both inputs are zero).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);

enum class Pochhammer { rising, falling };
ParamPoly pochhammer(const ParamPoly& base, int k, Pochhammer dir);

}  // namespace pwe
