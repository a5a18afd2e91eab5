// Multivariate gcd: recursive content / primitive-part split with a
// subresultant remainder sequence in the main variable.
#include <algorithm>
#include <utility>

#include "pwe/param_poly.hpp"

namespace pwe {

namespace {

using UPoly = std::vector<ParamPoly>;  // index = degree in the main variable

Monomial with_exponent(Monomial m, Sym v, unsigned e) {
  if (v == Sym::alpha) m.a = e;
  if (v == Sym::beta) m.b = e;
  if (v == Sym::omega) m.w = e;
  return m;
}

UPoly to_univariate(const ParamPoly& p, Sym v) {
  UPoly u(static_cast<std::size_t>(std::max(p.degree(v), 0)) + 1);
  std::vector<std::vector<ParamPoly::Term>> parts(u.size());
  for (const auto& t : p.terms()) {
    const Monomial m = t.mono();
    parts[m.exponent(v)].push_back({with_exponent(m, v, 0).key(), t.coef});
  }
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = ParamPoly::from_terms(std::move(parts[i]));
  return u;
}

ParamPoly from_univariate(const UPoly& u, Sym v) {
  std::vector<ParamPoly::Term> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (const auto& t : u[i].terms()) {
      out.push_back({with_exponent(t.mono(), v, static_cast<unsigned>(i)).key(), t.coef});
    }
  }
  return ParamPoly::from_terms(std::move(out));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int deg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

ParamPoly content(const UPoly& u) {
  ParamPoly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

UPoly divide_all(const UPoly& u, const ParamPoly& d) {
  UPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(divide_exact(c, d));
  return out;
}

UPoly primitive(const UPoly& u) { return divide_all(u, content(u)); }

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = deg(b);
  int e = deg(a) - db + 1;
  const ParamPoly& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    const ParamPoly lr = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= lr * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    const ParamPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  ParamPoly g(1);
  ParamPoly h(1);
  while (true) {
    const int d = deg(a) - deg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive(b);
    if (deg(r) == 0) return {ParamPoly(1)};
    a = std::move(b);
    b = divide_all(r, g * h.pow(static_cast<unsigned>(d)));
    g = a.back();
    if (d == 0) continue;
    h = divide_exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
  }
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a == b) return a.monic();
  for (Sym v : {Sym::alpha, Sym::beta, Sym::omega}) {
    const int da = a.degree(v);
    const int db = b.degree(v);
    if (da <= 0 && db <= 0) continue;
    if (da <= 0) return gcd(a, content(to_univariate(b, v)));
    if (db <= 0) return gcd(content(to_univariate(a, v)), b);
    const UPoly ua = to_univariate(a, v);
    const UPoly ub = to_univariate(b, v);
    const ParamPoly ca = content(ua);
    const ParamPoly cb = content(ub);
    const ParamPoly g = gcd(ca, cb);
    const UPoly h = subresultant_gcd(divide_all(ua, ca), divide_all(ub, cb));
    return (g * from_univariate(h, v)).monic();
  }
  return ParamPoly(1);
}

}  // namespace pwe
