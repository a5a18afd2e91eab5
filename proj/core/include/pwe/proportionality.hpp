#pragma once

#include <array>
#include <vector>
#include <optional>

#include "pwe/gauge.hpp"

namespace pwe {

struct Proportionality {
  RatFunc constant{1};
  std::array<int, 3> exps{};  // indexed by Base

  int exponent(Base b) const { return exps[static_cast<int>(b)]; }
};

// Finds c and integer exponents with p = c * prod base^exp * q exactly.
// Only the listed bases may carry a monomial factor. nullopt when no such
// relation exists; ZeroPolynomial when either input is zero.
std::optional<Proportionality> proportionality_factor(const ZPoly& p, const ZPoly& q,
                                                      const std::vector<Base>& bases);

// True when p * prod base^exp * ... equals q exactly; negative exponents are
// moved to the other side, so nothing is divided.
bool equal_up_to_monomial(const ZPoly& p, const ZPoly& q, const Proportionality& f);

}  // namespace pwe
