#include "pwe/int_poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace pwe {

std::uint64_t IntPoly::pack(unsigned z, unsigned a, unsigned b, unsigned w) {
  return (std::uint64_t{z} << 48) | (std::uint64_t{a} << 32) | (std::uint64_t{b} << 16) | std::uint64_t{w};
}

std::array<unsigned, 4> IntPoly::unpack(std::uint64_t key) {
  return {static_cast<unsigned>(key >> 48), static_cast<unsigned>((key >> 32) & 0xffff),
          static_cast<unsigned>((key >> 16) & 0xffff), static_cast<unsigned>(key & 0xffff)};
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
  IntPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int IntPoly::degree(int v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, unpack(t.key)[v]);
  return d;
}

BigInt IntPoly::norm1() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += abs(t.coef);
  return s;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<IntPoly::Term> merge(const std::vector<IntPoly::Term>& x, const std::vector<IntPoly::Term>& y,
                                 bool subtract) {
  std::vector<IntPoly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].key > y[j].key)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].key > x[i].key) {
      out.push_back({y[j].key, subtract ? BigInt(-y[j].coef) : y[j].coef});
      ++j;
    } else {
      BigInt c = subtract ? BigInt(x[i].coef - y[j].coef) : BigInt(x[i].coef + y[j].coef);
      if (c != 0) out.push_back({x[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.terms_ = merge(a.terms_, b.terms_, false);
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.terms_ = merge(a.terms_, b.terms_, true);
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<std::uint64_t, std::size_t> slot;
  slot.reserve(a.terms_.size() + b.terms_.size());
  std::vector<IntPoly::Term> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto [it, fresh] = slot.try_emplace(x.key + y.key, acc.size());
      if (fresh) acc.push_back({x.key + y.key, 0});
      mpz_addmul(acc[it->second].coef.get_mpz_t(), x.coef.get_mpz_t(), y.coef.get_mpz_t());
    }
  }
  return IntPoly::from_terms(std::move(acc));
}

}  // namespace pwe
