#pragma once

// Kronecker substitution: a polynomial in (z, alpha, beta, omega) with integer
// coefficients becomes one big integer, slot by slot, so that products and
// exact quotients reduce to GMP integer arithmetic.

#include <array>
#include <cstdint>
#include <vector>

#include "pwe/int_poly.hpp"
#include "pwe/zpoly.hpp"

namespace pwe::kronecker {

// Monomial z^e0 alpha^e1 beta^e2 omega^e3 goes to the slot
// e0 + r0*(e1 + r1*(e2 + r2*e3)), each slot limbs_per_slot limbs wide.
struct Packing {
  std::array<std::uint64_t, 4> radix{1, 1, 1, 1};
  std::size_t limbs_per_slot = 1;
  std::size_t slots = 1;

  // radix[v] must exceed every exponent of v; coefficients stay below 2^(bits-1) in magnitude.
  Packing(const std::array<std::uint64_t, 4>& radix, std::size_t bits);

  std::uint64_t slot_of(std::uint64_t key) const;
  std::uint64_t key_of(std::uint64_t slot) const;
};

std::size_t bit_length(const BigInt& x);

BigInt pack(const IntPoly& p, const Packing& pk);
// Balanced digits; throws if the value does not fit the layout.
IntPoly unpack(const BigInt& v, const Packing& pk);

// Integer image of p: p = result / scale with scale a positive integer.
IntPoly to_int_poly(const ZPoly& p, BigInt& scale);
ZPoly from_int_poly(const IntPoly& p, const BigInt& scale);

// Product through one big-integer multiplication. Both operands must have
// polynomial coefficients.
ZPoly multiply(const ZPoly& a, const ZPoly& b);

// One term of a polynomial identity: weight * f_1 * ... * f_k.
struct Product {
  BigRational weight;
  std::vector<const ZPoly*> factors;
};

// True when the sum of the products vanishes identically. Everything is packed
// under one layout wide enough for the sum, so no term is ever unpacked.
bool vanishes(const std::vector<Product>& terms);

}  // namespace pwe::kronecker
