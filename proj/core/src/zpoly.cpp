#include "pwe/zpoly.hpp"

#include <sstream>

#include "kronecker.hpp"
#include "pwe/errors.hpp"

namespace pwe {

ZPoly::ZPoly(const RatFunc& c) {
  if (!c.is_zero()) c_.push_back(c);
}

ZPoly::ZPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly ZPoly::z() { return monomial(1); }

ZPoly ZPoly::monomial(int power, const RatFunc& c) {
  if (power < 0) throw InvalidDegree("negative power of z");
  std::vector<RatFunc> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::linear(const RatFunc& a, const RatFunc& b) { return ZPoly(std::vector<RatFunc>{a, b}); }

RatFunc ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc();
  return c_[i];
}

bool ZPoly::has_polynomial_coeffs() const {
  for (const auto& c : c_) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

namespace {

// Schoolbook cost in coefficient-term products.
std::size_t work(const ZPoly& a, const ZPoly& b) {
  std::size_t ta = 0;
  std::size_t tb = 0;
  for (const auto& c : a.coeffs()) ta += c.num().size();
  for (const auto& c : b.coeffs()) tb += c.num().size();
  return ta * tb;
}

}  // namespace

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (work(a, b) > 4096 && a.has_polynomial_coeffs() && b.has_polynomial_coeffs()) return kronecker::multiply(a, b);
  std::vector<RatFunc> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return ZPoly(std::move(out));
}

ZPoly ZPoly::pow(unsigned e) const {
  ZPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<RatFunc> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * RatFunc(static_cast<long>(i));
  return ZPoly(std::move(out));
}

ZPoly ZPoly::reflected() const {
  ZPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

ZPoly ZPoly::shifted(Sym s, const BigRational& by) const {
  std::vector<RatFunc> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.shifted(s, by));
  return ZPoly(std::move(out));
}

ZPoly ZPoly::negated(Sym s) const {
  std::vector<RatFunc> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.negated(s));
  return ZPoly(std::move(out));
}

RatFunc ZPoly::evaluate(const RatFunc& z) const {
  RatFunc acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

int ZPoly::order_at_zero() const {
  if (c_.empty()) throw ZeroPolynomial("order of the zero polynomial");
  int k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

ZPoly ZPoly::without_zero_root() const {
  const int k = order_at_zero();
  return ZPoly(std::vector<RatFunc>(c_.begin() + k, c_.end()));
}

ZPoly ZPoly::divide_linear(int point) const {
  if (c_.empty()) return {};
  // Synthetic division, top coefficient first.
  const RatFunc p(point);
  std::vector<RatFunc> q(c_.size() - 1);
  RatFunc carry;
  for (std::size_t i = c_.size(); i-- > 0;) {
    carry = carry * p + c_[i];
    if (i > 0) q[i - 1] = carry;
  }
  if (!carry.is_zero()) throw NotDivisible("polynomial does not vanish at the requested point");
  return ZPoly(std::move(q));
}

int ZPoly::multiplicity(int point) const {
  if (c_.empty()) throw ZeroPolynomial("multiplicity in the zero polynomial");
  int k = 0;
  ZPoly cur = *this;
  while (cur.degree() > 0 && cur.evaluate(RatFunc(point)).is_zero()) {
    cur = cur.divide_linear(point);
    ++k;
  }
  return k;
}

std::string ZPoly::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[i].str() << ')';
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return os.str();
}

}  // namespace pwe
