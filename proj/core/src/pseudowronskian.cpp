#include "pwe/pseudowronskian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pwe/errors.hpp"

namespace pwe {

namespace {

const ParamPoly& alpha() {
  static const ParamPoly a = ParamPoly::var(Sym::alpha);
  return a;
}

const ParamPoly& beta() {
  static const ParamPoly b = ParamPoly::var(Sym::beta);
  return b;
}

ParamPoly sym_plus(const ParamPoly& s, int sign, int shift) { return (sign > 0 ? s : -s) + ParamPoly(shift); }

std::string describe(const ZPoly& p) {
  std::string s = p.str();
  if (s.size() > 4000) s = s.substr(0, 4000) + " ...";
  return s;
}

}  // namespace

UniversalCharacter make_uc(const std::vector<int>& psi, const std::vector<int>& phi) {
  try {
    return {maya_from_entries(psi), maya_from_entries(phi)};
  } catch (const DuplicateIndex&) {
    throw DegenerateChain("repeated index within a family; degenerate chains are not supported");
  }
}

std::vector<SeedSpec> row_labels(Model model, const UniversalCharacter& uc) {
  std::vector<SeedSpec> rows;
  for (auto it = uc.psi.pos.rbegin(); it != uc.psi.pos.rend(); ++it) rows.push_back({model, Family::psi, *it});
  for (int n : uc.psi.neg) rows.push_back({model, Family::psi, n});
  for (auto it = uc.phi.pos.rbegin(); it != uc.phi.pos.rend(); ++it) rows.push_back({model, Family::phi, *it});
  for (int l : uc.phi.neg) rows.push_back({model, Family::phi, l});
  return rows;
}

const std::vector<Base>& model_bases(Model model) {
  static const std::vector<Base> lag{Base::z};
  static const std::vector<Base> jac{Base::one_minus_z, Base::one_plus_z};
  return model == Model::laguerre ? lag : jac;
}

namespace {

// Gauge-cleared i-th derivative of one seed, the matrix entry in column i.
ZPoly laguerre_entry(const SeedSpec& s, int i, int size) {
  const int pad = size - 1 - i;
  if (s.family == Family::psi && s.index >= 0) {
    const int n = s.index;
    if (i > n) return {};
    ZPoly p = laguerre_poly(n - i, sym_plus(alpha(), 1, i), 1);
    return i % 2 ? -p : p;
  }
  if (s.family == Family::psi) {
    const int n = -s.index - 1;
    const ParamPoly c = pochhammer(ParamPoly(n + 1), i, Pochhammer::rising);
    return ZPoly::monomial(pad, c) * laguerre_poly(n + i, sym_plus(alpha(), -1, -i), -1);
  }
  if (s.index >= 0) {
    const int l = s.index;
    const ParamPoly c = pochhammer(ParamPoly(l) - alpha(), i, Pochhammer::falling);
    return ZPoly::monomial(pad, c) * laguerre_poly(l, sym_plus(alpha(), -1, -i), 1);
  }
  const int l = -s.index - 1;
  return laguerre_poly(l, sym_plus(alpha(), 1, i), -1);
}

ZPoly jacobi_entry(const SeedSpec& s, int i, int size) {
  const unsigned pad = static_cast<unsigned>(size - 1 - i);
  const ZPoly one_minus = ZPoly::linear(1, -1);
  const ZPoly one_plus = ZPoly::linear(1, 1);
  if (s.family == Family::psi && s.index >= 0) {
    const int n = s.index;
    if (i > n) return {};
    const ParamPoly c = pochhammer(alpha() + beta() + ParamPoly(n + 1), i, Pochhammer::rising) *
                        BigRational(1, BigInt(1) << static_cast<mp_bitcnt_t>(i));
    return jacobi_poly(n - i, sym_plus(alpha(), 1, i), sym_plus(beta(), 1, i), 1) * RatFunc(c);
  }
  if (s.family == Family::psi) {
    const int n = -s.index - 1;
    BigInt two_pow = BigInt(1) << static_cast<mp_bitcnt_t>(i);
    if (i % 2) two_pow = -two_pow;
    const ParamPoly c = pochhammer(ParamPoly(n + 1), i, Pochhammer::rising) * BigRational(two_pow);
    return (one_minus * one_plus).pow(pad) *
           jacobi_poly(n + i, sym_plus(alpha(), -1, -i), sym_plus(beta(), -1, -i), 1) * RatFunc(c);
  }
  if (s.index >= 0) {
    const int l = s.index;
    ParamPoly c = pochhammer(ParamPoly(l) - alpha(), i, Pochhammer::falling);
    if (i % 2) c = -c;
    return one_minus.pow(pad) * jacobi_poly(l, sym_plus(alpha(), -1, -i), sym_plus(beta(), 1, i), 1) * RatFunc(c);
  }
  const int l = -s.index - 1;
  const ParamPoly c = pochhammer(ParamPoly(l) - beta(), i, Pochhammer::falling);
  return one_plus.pow(pad) * jacobi_poly(l, sym_plus(alpha(), 1, i), sym_plus(beta(), -1, -i), 1) * RatFunc(c);
}

}  // namespace

PseudoWronskianMatrix build_matrix(Model model, const UniversalCharacter& uc) {
  PseudoWronskianMatrix pm;
  pm.model = model;
  pm.uc = uc;
  pm.row_labels = row_labels(model, uc);
  const int size = static_cast<int>(pm.row_labels.size());
  for (const auto& s : pm.row_labels) {
    std::vector<ZPoly> row;
    for (int i = 0; i < size; ++i) {
      row.push_back(model == Model::laguerre ? laguerre_entry(s, i, size) : jacobi_entry(s, i, size));
    }
    pm.entries.push_back(std::move(row));
  }
  return pm;
}

ZPoly pseudo_wronskian(Model model, const UniversalCharacter& uc) {
  return determinant(build_matrix(model, uc).entries);
}

GaugeFunction matrix_gauge(Model model, const UniversalCharacter& uc) {
  const int size = uc.m() + uc.r();
  const BigRational m(size);
  const int kbar = uc.psi.kbar();
  const int kappa = uc.phi.k();
  const int kappabar = uc.phi.kbar();
  GaugeFunction g;
  g.num = ZPoly(1);
  // u^M times the inverse of the per-row multipliers used to clear the gauges.
  if (model == Model::laguerre) {
    g.e_z = -m / 2 + (kbar + kappabar);
    g.exponent(Base::z) = Exponent{m / 2, 0, m / 4} - Exponent{1, 0, m - 1} * BigRational(kbar + kappa);
  } else {
    g.exponent(Base::one_minus_z) = Exponent{m / 2, 0, m / 4} - Exponent{1, 0, m - 1} * BigRational(kbar + kappa);
    g.exponent(Base::one_plus_z) = Exponent{0, m / 2, m / 4} - Exponent{0, 1, m - 1} * BigRational(kbar + kappabar);
  }
  return g;
}

Canonical canonicalize(Model model, const UniversalCharacter& uc) {
  const FlatResult fpsi = canonical_flat(uc.psi);
  const FlatResult fphi = canonical_flat(uc.phi);
  Canonical c;
  c.uc = {fpsi.diagram, fphi.diagram};
  c.alpha_shift = -fpsi.shift_count + fphi.shift_count;
  c.beta_shift = model == Model::jacobi ? -(fpsi.shift_count + fphi.shift_count) : 0;
  const int kbar = uc.psi.kbar();
  const int kappa = uc.phi.k();
  const int kappabar = uc.phi.kbar();
  const int flat_phi = fphi.diagram.size();  // dbar_1 + kappa of the phi symbol
  auto pair = [](int x) { return x * (x - 1); };
  const int lead = pair(kbar + kappa) - pair(flat_phi);
  if (model == Model::laguerre) {
    c.exps[static_cast<int>(Base::z)] = lead;
  } else {
    c.exps[static_cast<int>(Base::one_minus_z)] = lead;
    c.exps[static_cast<int>(Base::one_plus_z)] = pair(kbar + kappabar);
  }
  return c;
}

std::string report_convention() {
  return "rows ordered psi>=0 by increasing index, psi<0 by decreasing index, then phi likewise; columns are derivative "
         "orders 0..M-1; pw(uc) = constant * prod(base^exp) * pw(canonical) evaluated at "
         "(alpha + alpha_shift, beta + beta_shift)";
}

EquivalenceReport verify_equivalence(Model model, const UniversalCharacter& uc) {
  const Canonical canon = canonicalize(model, uc);
  EquivalenceReport rep;
  rep.model = model;
  rep.source = uc;
  rep.canonical = canon.uc;
  rep.alpha_shift = canon.alpha_shift;
  rep.beta_shift = canon.beta_shift;
  rep.predicted_exps = canon.exps;
  rep.convention = report_convention();
  const ZPoly p = pseudo_wronskian(model, uc);
  const ZPoly q = pseudo_wronskian(model, canon.uc)
                      .shifted(Sym::alpha, canon.alpha_shift)
                      .shifted(Sym::beta, canon.beta_shift);
  const auto f = proportionality_factor(p, q, model_bases(model));
  if (!f) {
    throw NotProportional("pseudo-Wronskians of " + to_string(uc) + " and its canonical form are not proportional\n" +
                          "  pw(uc)        = " + describe(p) + "\n  pw(canonical) = " + describe(q));
  }
  rep.exps = f->exps;
  rep.constant = f->constant;
  rep.verified = rep.exps == rep.predicted_exps && equal_up_to_monomial(p, q, *f);
  return rep;
}

OracleReport oracle_check(Model model, const UniversalCharacter& uc, int bound) {
  const int size = uc.m() + uc.r();
  if (size > bound) {
    throw ShapeError("oracle limited to " + std::to_string(bound) + " seeds, got " + std::to_string(size));
  }
  OracleReport rep;
  rep.model = model;
  rep.uc = uc;
  const ZPoly pw = pseudo_wronskian(model, uc);
  if (size == 0) {
    rep.matched = pw == ZPoly(1);
    if (!rep.matched) throw OracleMismatch("empty chain must give 1, got " + describe(pw));
    return rep;
  }
  std::vector<GaugeFunction> seeds;
  for (const auto& s : row_labels(model, uc)) seeds.push_back(seed(s));
  const GaugeFunction w = gauge_wronskian(seeds);
  const auto fnum = proportionality_factor(w.num, pw, model_bases(model));
  const auto fden = proportionality_factor(w.den, ZPoly(1), model_bases(model));
  if (!fnum || !fden) {
    throw OracleMismatch("gauge Wronskian of " + to_string(uc) + " is not proportional to the pseudo-Wronskian\n" +
                         "  W numerator = " + describe(w.num) + "\n  pw          = " + describe(pw));
  }
  rep.factor.constant = fnum->constant / fden->constant;
  for (int b = 0; b < 3; ++b) rep.factor.exps[b] = fnum->exps[b] - fden->exps[b];
  rep.matched = true;
  return rep;
}

}  // namespace pwe
