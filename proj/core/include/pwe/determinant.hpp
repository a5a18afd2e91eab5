#pragma once

#include <vector>

#include "pwe/int_poly.hpp"
#include "pwe/zpoly.hpp"

namespace pwe {

using ZMatrix = std::vector<std::vector<ZPoly>>;

// Matrix of integer polynomials together with the scalar that was used to
// clear denominators: det(original) = det(rows) / scale.
struct ClearedMatrix {
  std::vector<std::vector<IntPoly>> rows;
  RatFunc scale{1};
};

ClearedMatrix clear_denominators(const ZMatrix& mat);

// Fraction-free Bareiss elimination on Kronecker-packed big integers.
ZPoly determinant(const ZMatrix& mat);
IntPoly determinant(const std::vector<std::vector<IntPoly>>& rows);

// Cofactor expansion over IntPoly; independent of the Bareiss route.
ZPoly laplace_determinant(const ZMatrix& mat);
IntPoly laplace_determinant(const std::vector<std::vector<IntPoly>>& rows);

// Convert back to ZPoly, dividing every coefficient by scale.
ZPoly to_zpoly(const IntPoly& p, const RatFunc& scale);

}  // namespace pwe
