#include "kronecker.hpp"

#include <algorithm>
#include <map>

#include "pwe/errors.hpp"

namespace pwe::kronecker {

Packing::Packing(const std::array<std::uint64_t, 4>& r, std::size_t bits) : radix(r) {
  limbs_per_slot = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  slots = radix[0] * radix[1] * radix[2] * radix[3];
}

std::uint64_t Packing::slot_of(std::uint64_t key) const {
  const auto e = IntPoly::unpack(key);
  return e[0] + radix[0] * (e[1] + radix[1] * (e[2] + radix[2] * e[3]));
}

std::uint64_t Packing::key_of(std::uint64_t slot) const {
  std::array<unsigned, 4> e{};
  for (int v = 0; v < 3; ++v) {
    e[v] = static_cast<unsigned>(slot % radix[v]);
    slot /= radix[v];
  }
  e[3] = static_cast<unsigned>(slot);
  return IntPoly::pack(e[0], e[1], e[2], e[3]);
}

std::size_t bit_length(const BigInt& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

BigInt pack(const IntPoly& p, const Packing& pk) {
  const std::size_t width = pk.limbs_per_slot;
  std::vector<mp_limb_t> plus(pk.slots * width + 1, 0);
  std::vector<mp_limb_t> minus(pk.slots * width + 1, 0);
  for (const auto& t : p.terms()) {
    const auto e = IntPoly::unpack(t.key);
    for (int v = 0; v < 4; ++v) {
      if (e[v] >= pk.radix[v]) throw Error("Kronecker packing: exponent exceeds its radix");
    }
    const std::size_t n = mpz_size(t.coef.get_mpz_t());
    if (n > width) throw Error("Kronecker packing: coefficient wider than its slot");
    auto& buf = sgn(t.coef) > 0 ? plus : minus;
    const std::size_t off = pk.slot_of(t.key) * width;
    for (std::size_t l = 0; l < n; ++l) buf[off + l] = mpz_getlimbn(t.coef.get_mpz_t(), static_cast<mp_size_t>(l));
  }
  mpz_t a;
  mpz_t b;
  mpz_roinit_n(a, plus.data(), static_cast<mp_size_t>(plus.size()));
  mpz_roinit_n(b, minus.data(), static_cast<mp_size_t>(minus.size()));
  BigInt r;
  mpz_sub(r.get_mpz_t(), a, b);
  return r;
}

IntPoly unpack(const BigInt& v, const Packing& pk) {
  if (v == 0) return {};
  const int sign = sgn(v);
  const BigInt mag = abs(v);
  const mp_limb_t* limbs = mpz_limbs_read(mag.get_mpz_t());
  const std::size_t n = mpz_size(mag.get_mpz_t());
  const std::size_t width = pk.limbs_per_slot;
  BigInt full = 1;
  full <<= static_cast<mp_bitcnt_t>(width * GMP_NUMB_BITS);
  const BigInt half = full >> 1;
  std::vector<IntPoly::Term> terms;
  BigInt carry = 0;
  BigInt digit;
  for (std::size_t slot = 0; slot * width < n || carry != 0; ++slot) {
    digit = carry;
    if (slot * width < n) {
      mpz_t raw;
      const std::size_t count = std::min(width, n - slot * width);
      mpz_roinit_n(raw, limbs + slot * width, static_cast<mp_size_t>(count));
      mpz_add(digit.get_mpz_t(), digit.get_mpz_t(), raw);
    }
    if (digit >= half) {
      digit -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (digit != 0) {
      if (slot >= pk.slots) throw Error("Kronecker packing: value overflows the layout");
      terms.push_back({pk.key_of(slot), sign > 0 ? digit : BigInt(-digit)});
    }
  }
  return IntPoly::from_terms(std::move(terms));
}

IntPoly to_int_poly(const ZPoly& p, BigInt& scale) {
  scale = 1;
  for (const auto& c : p.coeffs()) {
    if (!c.is_polynomial()) throw Error("integer image of a polynomial with rational-function coefficients");
    const BigInt d = c.num().denominator_lcm();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<IntPoly::Term> terms;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    for (const auto& t : p.coeffs()[j].num().terms()) {
      const Monomial m = t.mono();
      BigInt v = t.coef.get_num() * (scale / t.coef.get_den());
      terms.push_back({IntPoly::pack(static_cast<unsigned>(j), m.a, m.b, m.w), std::move(v)});
    }
  }
  return IntPoly::from_terms(std::move(terms));
}

ZPoly from_int_poly(const IntPoly& p, const BigInt& scale) {
  std::map<unsigned, std::vector<ParamPoly::Term>> by_power;
  for (const auto& t : p.terms()) {
    const auto e = IntPoly::unpack(t.key);
    BigRational c(t.coef, scale);
    c.canonicalize();
    by_power[e[0]].push_back({Monomial{e[1], e[2], e[3]}.key(), std::move(c)});
  }
  if (by_power.empty()) return {};
  std::vector<RatFunc> coeffs(by_power.rbegin()->first + 1);
  for (auto& [power, terms] : by_power) coeffs[power] = RatFunc(ParamPoly::from_terms(std::move(terms)));
  return ZPoly(std::move(coeffs));
}

namespace {

BigInt max_abs(const IntPoly& p) {
  BigInt m = 0;
  for (const auto& t : p.terms()) {
    if (abs(t.coef) > m) m = abs(t.coef);
  }
  return m;
}

}  // namespace

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BigInt sa;
  BigInt sb;
  const IntPoly ia = to_int_poly(a, sa);
  const IntPoly ib = to_int_poly(b, sb);
  std::array<std::uint64_t, 4> radix{};
  for (int v = 0; v < 4; ++v) radix[v] = static_cast<std::uint64_t>(ia.degree(v) + ib.degree(v)) + 1;
  // |coefficient of a*b| <= min(|a|_inf |b|_1, |a|_1 |b|_inf)
  const BigInt bound = std::min(max_abs(ia) * ib.norm1(), ia.norm1() * max_abs(ib));
  const Packing pk(radix, bit_length(bound) + 2);
  const BigInt prod = pack(ia, pk) * pack(ib, pk);
  return from_int_poly(unpack(prod, pk), sa * sb);
}

bool vanishes(const std::vector<Product>& terms) {
  struct Image {
    IntPoly poly;
    BigInt scale;
    BigInt sup;
    BigInt norm1;
  };
  std::vector<std::vector<Image>> images;
  std::vector<BigRational> weights;
  for (const auto& t : terms) {
    if (t.weight == 0) continue;
    bool zero = false;
    for (const ZPoly* f : t.factors) zero = zero || f->is_zero();
    if (zero) continue;
    std::vector<Image> row;
    BigRational w = t.weight;
    for (const ZPoly* f : t.factors) {
      Image im;
      im.poly = to_int_poly(*f, im.scale);
      im.sup = max_abs(im.poly);
      im.norm1 = im.poly.norm1();
      w /= im.scale;
      row.push_back(std::move(im));
    }
    images.push_back(std::move(row));
    weights.push_back(w);
  }
  if (images.empty()) return true;
  // Common integer weights.
  BigInt den = 1;
  for (const auto& w : weights) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
  std::array<std::uint64_t, 4> radix{1, 1, 1, 1};
  BigInt bound = 0;
  std::vector<BigInt> iw;
  for (std::size_t k = 0; k < images.size(); ++k) {
    const BigRational scaled = weights[k] * den;
    iw.push_back(scaled.get_num());
    std::array<std::uint64_t, 4> deg{};
    // |coefficients of f_1 ... f_k| <= sup(f_1) * prod_{i>1} norm1(f_i)
    BigInt b = abs(iw.back());
    for (std::size_t i = 0; i < images[k].size(); ++i) {
      const auto& im = images[k][i];
      b *= i == 0 ? im.sup : im.norm1;
      for (int v = 0; v < 4; ++v) deg[v] += static_cast<std::uint64_t>(std::max(im.poly.degree(v), 0));
    }
    bound += b;
    for (int v = 0; v < 4; ++v) radix[v] = std::max(radix[v], deg[v] + 1);
  }
  const Packing pk(radix, bit_length(bound) + 2);
  BigInt sum = 0;
  BigInt prod;
  for (std::size_t k = 0; k < images.size(); ++k) {
    prod = iw[k];
    for (const auto& im : images[k]) prod *= pack(im.poly, pk);
    sum += prod;
  }
  return sum == 0;
}

}  // namespace pwe::kronecker
