#include "pwe/determinant.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "kronecker.hpp"
#include "pwe/errors.hpp"

namespace pwe {

namespace {

using kronecker::Packing;
using kronecker::bit_length;

void require_square(const ZMatrix& mat) {
  for (const auto& row : mat) {
    if (row.size() != mat.size()) throw ShapeError("determinant of a non-square matrix");
  }
}

void require_square(const std::vector<std::vector<IntPoly>>& rows) {
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ShapeError("determinant of a non-square matrix");
  }
}

IntPoly unit() { return IntPoly::from_terms({{0, 1}}); }

// Largest sum of deg_v over a permutation of nonzero entries: an exact upper
// bound on deg_v of the determinant. Subset DP over columns.
std::uint64_t matching_degree(const std::vector<std::vector<IntPoly>>& rows, int v) {
  const std::size_t n = rows.size();
  std::vector<std::int64_t> best(std::size_t{1} << n, -1);
  best[0] = 0;
  for (std::uint32_t mask = 0; mask < best.size(); ++mask) {
    if (best[mask] < 0) continue;
    const std::size_t i = static_cast<std::size_t>(__builtin_popcount(mask));
    if (i == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u || rows[i][j].is_zero()) continue;
      auto& slot = best[mask | (1u << j)];
      slot = std::max(slot, best[mask] + rows[i][j].degree(v));
    }
  }
  return static_cast<std::uint64_t>(std::max<std::int64_t>(best.back(), 0));
}

// Degree and coefficient bounds for the determinant. Elimination runs on the
// packed integers exactly, so only the final value has to fit the layout.
Packing make_packing(const std::vector<std::vector<IntPoly>>& rows) {
  const std::size_t n = rows.size();
  std::array<std::uint64_t, 4> radix{};
  for (int v = 0; v < 4; ++v) {
    // Entries themselves must fit their slots, not only the result.
    std::uint64_t entry_max = 0;
    std::uint64_t by_row = 0;
    std::uint64_t by_col = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int rmax = 0;
      int cmax = 0;
      for (std::size_t j = 0; j < n; ++j) {
        rmax = std::max(rmax, rows[i][j].degree(v));
        cmax = std::max(cmax, rows[j][i].degree(v));
      }
      entry_max = std::max<std::uint64_t>(entry_max, static_cast<std::uint64_t>(rmax));
      by_row += static_cast<std::uint64_t>(rmax);
      by_col += static_cast<std::uint64_t>(cmax);
    }
    const std::uint64_t result = n <= 16 ? matching_degree(rows, v) : std::min(by_row, by_col);
    radix[v] = std::max(result, entry_max) + 1;
  }
  std::size_t row_bits = 0;
  std::size_t col_bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt rs = 0;
    BigInt cs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rs += rows[i][j].norm1();
      cs += rows[j][i].norm1();
    }
    row_bits += bit_length(rs);
    col_bits += bit_length(cs);
  }
  return Packing(radix, std::min(row_bits, col_bits) + 2);
}

}  // namespace

ClearedMatrix clear_denominators(const ZMatrix& mat) {
  require_square(mat);
  ClearedMatrix out;
  for (const auto& row : mat) {
    ParamPoly poly_den(1);
    for (const auto& e : row) {
      for (const auto& c : e.coeffs()) {
        if (!c.den().is_constant()) poly_den = lcm(poly_den, c.den());
      }
    }
    std::vector<std::vector<ParamPoly>> cleared;
    BigInt int_den = 1;
    for (const auto& e : row) {
      std::vector<ParamPoly> coeffs;
      for (const auto& c : e.coeffs()) {
        ParamPoly p = poly_den.is_constant() ? c.num() : c.num() * divide_exact(poly_den, c.den());
        const BigInt d = p.denominator_lcm();
        mpz_lcm(int_den.get_mpz_t(), int_den.get_mpz_t(), d.get_mpz_t());
        coeffs.push_back(std::move(p));
      }
      cleared.push_back(std::move(coeffs));
    }
    std::vector<IntPoly> int_row;
    for (const auto& coeffs : cleared) {
      std::vector<IntPoly::Term> terms;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (const auto& t : coeffs[j].terms()) {
          const Monomial m = t.mono();
          const BigRational v = t.coef * int_den;
          terms.push_back({IntPoly::pack(static_cast<unsigned>(j), m.a, m.b, m.w), v.get_num()});
        }
      }
      int_row.push_back(IntPoly::from_terms(std::move(terms)));
    }
    out.rows.push_back(std::move(int_row));
    out.scale *= RatFunc(poly_den * BigRational(int_den));
  }
  return out;
}

IntPoly determinant(const std::vector<std::vector<IntPoly>>& rows) {
  require_square(rows);
  const std::size_t n = rows.size();
  if (n == 0) return unit();
  for (const auto& row : rows) {
    if (std::all_of(row.begin(), row.end(), [](const IntPoly& p) { return p.is_zero(); })) return {};
  }
  const Packing pk = make_packing(rows);
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = kronecker::pack(rows[i][j], pk);
  }
  int sign = 1;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest nonzero pivot keeps the products cheap.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k] == 0) continue;
      if (best == n || mpz_size(m[i][k].get_mpz_t()) < mpz_size(m[best][k].get_mpz_t())) best = i;
    }
    if (best == n) return {};
    if (best != k) {
      std::swap(m[best], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), m[k][k].get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        if (k > 0) {
          mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        } else {
          mpz_swap(m[i][j].get_mpz_t(), tmp.get_mpz_t());
        }
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return kronecker::unpack(det, pk);
}

IntPoly laplace_determinant(const std::vector<std::vector<IntPoly>>& rows) {
  require_square(rows);
  const std::size_t n = rows.size();
  if (n > 20) throw ShapeError("cofactor expansion limited to 20 rows");
  std::unordered_map<std::uint32_t, IntPoly> memo;
  // Minor on the last popcount(mask) rows and the columns in mask.
  auto minor = [&](auto&& self, std::uint32_t mask) -> IntPoly {
    if (mask == 0) return unit();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t r = n - static_cast<std::size_t>(__builtin_popcount(mask));
    IntPoly sum;
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const bool negative = position++ % 2 == 1;
      if (rows[r][j].is_zero()) continue;
      IntPoly term = rows[r][j] * self(self, mask & ~(1u << j));
      sum = negative ? sum - term : sum + term;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return minor(minor, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

ZPoly to_zpoly(const IntPoly& p, const RatFunc& scale) {
  std::map<unsigned, std::vector<ParamPoly::Term>> by_power;
  for (const auto& t : p.terms()) {
    const auto e = IntPoly::unpack(t.key);
    by_power[e[0]].push_back({Monomial{e[1], e[2], e[3]}.key(), BigRational(t.coef)});
  }
  if (by_power.empty()) return {};
  std::vector<RatFunc> coeffs(by_power.rbegin()->first + 1);
  const bool constant_scale = scale.is_constant();
  const BigRational inv = constant_scale ? BigRational(1 / scale.num().constant_value()) : BigRational(1);
  for (auto& [power, terms] : by_power) {
    ParamPoly c = ParamPoly::from_terms(std::move(terms));
    coeffs[power] = constant_scale ? RatFunc(c * inv) : RatFunc(c) / scale;
  }
  return ZPoly(std::move(coeffs));
}

ZPoly determinant(const ZMatrix& mat) {
  const ClearedMatrix cm = clear_denominators(mat);
  return to_zpoly(determinant(cm.rows), cm.scale);
}

ZPoly laplace_determinant(const ZMatrix& mat) {
  const ClearedMatrix cm = clear_denominators(mat);
  return to_zpoly(laplace_determinant(cm.rows), cm.scale);
}

}  // namespace pwe
