#include "pwe/param_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "pwe/errors.hpp"

namespace pwe {

std::string rational_to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational rational_from_string(const std::string& s) {
  BigRational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw ParseError("malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_display(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

unsigned Monomial::exponent(Sym s) const {
  switch (s) {
    case Sym::alpha: return a;
    case Sym::beta: return b;
    case Sym::omega: return w;
  }
  return 0;
}

std::uint64_t Monomial::key() const {
  return (std::uint64_t{degree()} << 48) | (std::uint64_t{a} << 32) | (std::uint64_t{b} << 16) |
         std::uint64_t{w};
}

Monomial Monomial::from_key(std::uint64_t key) {
  return Monomial{static_cast<unsigned>((key >> 32) & 0xffff), static_cast<unsigned>((key >> 16) & 0xffff),
                  static_cast<unsigned>(key & 0xffff)};
}

ParamPoly::ParamPoly(long c) : ParamPoly(BigRational(c)) {}

ParamPoly::ParamPoly(const BigInt& c) : ParamPoly(BigRational(c)) {}

ParamPoly::ParamPoly(const BigRational& c) {
  if (c != 0) terms_.push_back({0, c});
}

ParamPoly ParamPoly::var(Sym s) {
  Monomial m;
  if (s == Sym::alpha) m.a = 1;
  if (s == Sym::beta) m.b = 1;
  if (s == Sym::omega) m.w = 1;
  return monomial(m, 1);
}

ParamPoly ParamPoly::monomial(const Monomial& m, const BigRational& c) {
  ParamPoly p;
  if (c != 0) p.terms_.push_back({m.key(), c});
  return p;
}

ParamPoly ParamPoly::affine(const BigRational& a, const BigRational& b, const BigRational& q) {
  return from_terms({{Monomial{1, 0, 0}.key(), a}, {Monomial{0, 1, 0}.key(), b}, {0, q}});
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  ParamPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    BigRational c = terms_[i].coef;
    while (j < terms_.size() && terms_[j].key == terms_[i].key) c += terms_[j++].coef;
    c.canonicalize();
    if (c != 0) {
      terms_[out].key = terms_[i].key;
      terms_[out].coef = c;
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

BigRational ParamPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coef;
  return 0;
}

int ParamPoly::degree(Sym s) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono().exponent(s));
  return d;
}

int ParamPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().key >> 48);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// Merge two sorted term lists with sign applied to the second one.
std::vector<ParamPoly::Term> merge(const std::vector<ParamPoly::Term>& x, const std::vector<ParamPoly::Term>& y,
                                   bool subtract) {
  std::vector<ParamPoly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].key > y[j].key)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].key > x[i].key) {
      out.push_back({y[j].key, subtract ? BigRational(-y[j].coef) : y[j].coef});
      ++j;
    } else {
      BigRational c = subtract ? BigRational(x[i].coef - y[j].coef) : BigRational(x[i].coef + y[j].coef);
      if (c != 0) out.push_back({x[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.terms_[0].coef;
  if (b.is_constant()) return a * b.terms_[0].coef;
  // Clear denominators so the inner loop is integer multiply-add only.
  const BigInt da = a.denominator_lcm();
  const BigInt db = b.denominator_lcm();
  auto integral = [](const ParamPoly& p, const BigInt& d) {
    std::vector<BigInt> v;
    v.reserve(p.terms_.size());
    for (const auto& t : p.terms_) v.push_back(t.coef.get_num() * (d / t.coef.get_den()));
    return v;
  };
  const auto ia = integral(a, da);
  const auto ib = integral(b, db);
  std::unordered_map<std::uint64_t, std::size_t> slot;
  slot.reserve(a.terms_.size() * b.terms_.size());
  std::vector<std::uint64_t> keys;
  std::vector<BigInt> acc;
  for (std::size_t i = 0; i < ia.size(); ++i) {
    for (std::size_t j = 0; j < ib.size(); ++j) {
      // Packed fields add independently as long as no field overflows 16 bits.
      const std::uint64_t key = a.terms_[i].key + b.terms_[j].key;
      auto [it, fresh] = slot.try_emplace(key, acc.size());
      if (fresh) {
        keys.push_back(key);
        acc.emplace_back(0);
      }
      mpz_addmul(acc[it->second].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const BigInt den = da * db;
  std::vector<ParamPoly::Term> terms;
  terms.reserve(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] == 0) continue;
    BigRational c(acc[i], den);
    c.canonicalize();
    terms.push_back({keys[i], std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.key > y.key; });
  ParamPoly r;
  r.terms_ = std::move(terms);
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::shifted(Sym s, const BigRational& by) const {
  if (by == 0) return *this;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const Monomial m = t.mono();
    const unsigned e = m.exponent(s);
    BigRational power = 1;  // by^(e-j), built from j = e downward
    for (unsigned j = e + 1; j-- > 0;) {
      Monomial n = m;
      if (s == Sym::alpha) n.a = j;
      if (s == Sym::beta) n.b = j;
      if (s == Sym::omega) n.w = j;
      out.push_back({n.key(), t.coef * binomial(e, j) * power});
      power *= by;
    }
  }
  return from_terms(std::move(out));
}

ParamPoly ParamPoly::negated(Sym s) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    if (t.mono().exponent(s) % 2 == 1) t.coef = -t.coef;
  }
  ParamPoly r;
  r.terms_ = std::move(out);
  return r;
}

ParamPoly ParamPoly::substitute(Sym s, const BigRational& c) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m = t.mono();
    BigRational v = t.coef;
    for (unsigned i = 0; i < m.exponent(s); ++i) v *= c;
    if (s == Sym::alpha) m.a = 0;
    if (s == Sym::beta) m.b = 0;
    if (s == Sym::omega) m.w = 0;
    out.push_back({m.key(), v});
  }
  return from_terms(std::move(out));
}

BigRational ParamPoly::evaluate(const BigRational& alpha, const BigRational& beta, const BigRational& omega) const {
  BigRational sum = 0;
  for (const auto& t : terms_) {
    const Monomial m = t.mono();
    BigRational v = t.coef;
    for (unsigned i = 0; i < m.a; ++i) v *= alpha;
    for (unsigned i = 0; i < m.b; ++i) v *= beta;
    for (unsigned i = 0; i < m.w; ++i) v *= omega;
    sum += v;
  }
  return sum;
}

BigInt ParamPoly::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& t : terms_) {
    if (t.coef.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  return l;
}

BigRational ParamPoly::content() const {
  if (terms_.empty()) return 0;
  BigInt g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  BigRational c(g, denominator_lcm());
  c.canonicalize();
  return c;
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * BigRational(1 / leading_coef());
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Monomial m = t.mono();
    BigRational c = t.coef;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::vector<std::string> factors;
    auto add = [&](const char* name, unsigned e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
    };
    add("alpha", m.a);
    add("beta", m.b);
    add("omega", m.w);
    if (factors.empty() || c != 1) factors.insert(factors.begin(), rational_display(c));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::optional<ParamPoly> try_divide(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.is_zero()) return ParamPoly{};
  if (b.is_constant()) return a * BigRational(1 / b.leading_coef());
  const Monomial lb = b.leading().mono();
  const BigRational inv = 1 / b.leading_coef();
  ParamPoly r = a;
  std::vector<ParamPoly::Term> quot;
  while (!r.is_zero()) {
    const Monomial lr = r.leading().mono();
    if (!lb.divides(lr)) return std::nullopt;
    const Monomial q{lr.a - lb.a, lr.b - lb.b, lr.w - lb.w};
    const BigRational c = r.leading_coef() * inv;
    quot.push_back({q.key(), c});
    r -= b * ParamPoly::monomial(q, c);
  }
  return ParamPoly::from_terms(std::move(quot));
}

ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible("polynomial division is not exact");
  return *q;
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (divide_exact(a, gcd(a, b)) * b).monic();
}

ParamPoly pochhammer(const ParamPoly& base, int k, Pochhammer dir) {
  if (k < 0) throw InvalidDegree("pochhammer length must be non-negative");
  ParamPoly r(1);
  for (int j = 0; j < k; ++j) r *= base + ParamPoly(dir == Pochhammer::rising ? j : -j);
  return r;
}

}  // namespace pwe
