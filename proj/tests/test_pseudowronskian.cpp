#include "doctest.h"
#include "printers.hpp"
#include "pwe/errors.hpp"
#include "pwe/pseudowronskian.hpp"
#include "pwe/sweep.hpp"

using namespace pwe;

namespace {

const ParamPoly a = ParamPoly::var(Sym::alpha);
const ParamPoly b = ParamPoly::var(Sym::beta);
const ParamPoly w = ParamPoly::var(Sym::omega);
const ZPoly z = ZPoly::z();

const UniversalCharacter kExample = make_uc({3, 1, -2}, {3, -3});

ParamPoly A(int s) { return a + ParamPoly(s); }
ParamPoly B(int s) { return b + ParamPoly(s); }

GaugeFunction inverse(const GaugeFunction& g) {
  GaugeFunction r;
  r.e_z = -g.e_z;
  for (int i = 0; i < 3; ++i) r.e_pow[i] = Exponent{} - g.e_pow[i];
  r.num = g.den;
  r.den = g.num;
  return r;
}

// f / g is a constant times a (possibly fractional) monomial in the model's bases.
bool proportional_gauges(const GaugeFunction& f, const GaugeFunction& g, Model model) {
  const GaugeFunction h = f * inverse(g);
  if (h.e_z != 0) return false;
  for (const auto& e : h.e_pow) {
    if (e.a != 0 || e.b != 0) return false;
  }
  return proportionality_factor(h.num, h.den, model_bases(model)).has_value();
}

std::optional<Proportionality> pw_ratio(Model model, const UniversalCharacter& x, const UniversalCharacter& y,
                                        int alpha_shift, int beta_shift) {
  const ZPoly p = pseudo_wronskian(model, x);
  const ZPoly q = pseudo_wronskian(model, y).shifted(Sym::alpha, alpha_shift).shifted(Sym::beta, beta_shift);
  return proportionality_factor(p, q, model_bases(model));
}

}  // namespace

TEST_CASE("empty and trivial characters") {
  const UniversalCharacter empty;
  for (Model m : {Model::laguerre, Model::jacobi}) {
    CHECK(build_matrix(m, empty).entries.empty());
    CHECK(pseudo_wronskian(m, empty) == ZPoly(1));
    CHECK(pseudo_wronskian(m, make_uc({0}, {})) == ZPoly(1));
  }
  CHECK_THROWS_AS(make_uc({2, 2}, {}), DegenerateChain);
  CHECK_THROWS_AS(make_uc({}, {-1, 3, -1}), DegenerateChain);
}

TEST_CASE("Laguerre example matrix rows") {
  const auto pm = build_matrix(Model::laguerre, kExample);
  REQUIRE(pm.entries.size() == 5);
  const std::vector<SeedSpec> labels{{Model::laguerre, Family::psi, 1},
                                     {Model::laguerre, Family::psi, 3},
                                     {Model::laguerre, Family::psi, -2},
                                     {Model::laguerre, Family::phi, 3},
                                     {Model::laguerre, Family::phi, -3}};
  CHECK(pm.row_labels == labels);
  const auto& E = pm.entries;
  // L_{i,j} = (-1)^i L_j^{alpha+i}(z)
  auto L = [](int i, int j) { return laguerre(j, i, 1) * RatFunc(i % 2 ? -1 : 1); };
  CHECK(E[0] == std::vector<ZPoly>{L(0, 1), ZPoly(-1), ZPoly(), ZPoly(), ZPoly()});
  CHECK(E[1] == std::vector<ZPoly>{L(0, 3), L(1, 2), L(2, 1), ZPoly(-1), ZPoly()});
  for (int i = 0; i < 5; ++i) {
    // psi_{-2}: (2)_i rising z^{4-i} L_{1+i}^{-alpha-i}(-z)
    CHECK(E[2][i] == z.pow(static_cast<unsigned>(4 - i)) * laguerre(1 + i, -i, -1, true) *
                         RatFunc(pochhammer(ParamPoly(2), i, Pochhammer::rising)));
    // Lambda_{i,3} = (3-alpha)_i falling L_3^{-alpha-i}(z)
    CHECK(E[3][i] == z.pow(static_cast<unsigned>(4 - i)) * laguerre(3, -i, 1, true) *
                         RatFunc(pochhammer(ParamPoly(3) - a, i, Pochhammer::falling)));
    // Lambda-bar_{i,2} = L_2^{alpha+i}(-z)
    CHECK(E[4][i] == laguerre(2, i, -1));
  }
}

TEST_CASE("Jacobi example first row") {
  const auto pm = build_matrix(Model::jacobi, kExample);
  REQUIRE(pm.entries.size() == 5);
  const auto& row = pm.entries[0];
  CHECK(row[0] == jacobi(1, 0, 0, 1));
  CHECK(row[1] == ZPoly(RatFunc((a + b + ParamPoly(2)) * BigRational(1, 2))));
  CHECK(row[2].is_zero());
  CHECK(row[3].is_zero());
  CHECK(row[4].is_zero());
}

TEST_CASE("canonical forms of the worked example") {
  Canonical c = canonicalize(Model::laguerre, kExample);
  CHECK(c.uc == make_uc({5, 3, 1}, {6, 2, 1}));
  CHECK(to_string(durfee_from_maya(c.uc.psi)) == "[3,2,1|∅]");
  CHECK(c.alpha_shift == 1);
  CHECK(c.beta_shift == 0);
  CHECK(c.exps == std::array<int, 3>{-4, 0, 0});

  c = canonicalize(Model::jacobi, kExample);
  CHECK(c.alpha_shift == 1);
  CHECK(c.beta_shift == -5);
  CHECK(c.exps == std::array<int, 3>{0, -4, 2});

  const UniversalCharacter flat = make_uc({4, 1}, {0});
  for (Model m : {Model::laguerre, Model::jacobi}) {
    c = canonicalize(m, flat);
    CHECK(c.uc == flat);
    CHECK(c.alpha_shift == 0);
    CHECK(c.beta_shift == 0);
    CHECK(c.exps == std::array<int, 3>{0, 0, 0});
  }
}

TEST_CASE("equivalence of the worked example") {
  EquivalenceReport r = verify_equivalence(Model::laguerre, kExample);
  CHECK(r.verified);
  CHECK(r.exps == std::array<int, 3>{-4, 0, 0});
  CHECK(r.alpha_shift == 1);
  r = verify_equivalence(Model::jacobi, kExample);
  CHECK(r.verified);
  CHECK(r.exps == std::array<int, 3>{0, -4, 2});
  CHECK(r.alpha_shift == 1);
  CHECK(r.beta_shift == -5);
  for (Model m : {Model::laguerre, Model::jacobi}) {
    r = verify_equivalence(m, make_uc({3, 0}, {2}));
    CHECK(r.verified);
    CHECK(r.constant == RatFunc(1));
    CHECK(r.exps == std::array<int, 3>{0, 0, 0});
  }
}

TEST_CASE("Wronskian in z equals matrix gauge times pseudo-Wronskian") {
  const std::vector<UniversalCharacter> ucs{kExample, make_uc({2, 1}, {}), make_uc({-1, -3}, {1}),
                                            make_uc({0}, {-1, -2}), make_uc({4}, {2, -1})};
  for (Model m : {Model::laguerre, Model::jacobi}) {
    for (const auto& uc : ucs) {
      INFO(to_string(m), " ", to_string(uc));
      std::vector<GaugeFunction> seeds;
      for (const auto& s : row_labels(m, uc)) seeds.push_back(seed(s));
      GaugeFunction rhs = matrix_gauge(m, uc);
      rhs.num = pseudo_wronskian(m, uc);
      CHECK(gauge_equal(gauge_wronskian(seeds), rhs));
    }
  }
}

TEST_CASE("gauge Wronskian oracle on small characters") {
  for (Model m : {Model::laguerre, Model::jacobi}) {
    for (const auto& uc : enumerate_ucs(3, -2, 3)) {
      INFO(to_string(m), " ", to_string(uc));
      CHECK(oracle_check(m, uc).matched);
    }
  }
  CHECK_THROWS_AS(oracle_check(Model::laguerre, make_uc({1, 2, 3}, {4}), 3), ShapeError);
}

TEST_CASE("classical two-seed Wronskian identities") {
  for (Model m : {Model::laguerre, Model::jacobi}) {
    const int beta_up = m == Model::jacobi ? 1 : 0;
    auto S = [m](Family f, int i) { return seed({m, f, i}); };
    for (int n = -3; n <= 5; ++n) {
      INFO(to_string(m), " n=", n);
      const GaugeFunction psi_n = S(Family::psi, n);
      if (n != 0) {
        CHECK(proportional_gauges(gauge_wronskian({S(Family::psi, 0), psi_n}),
                                  S(Family::psi, 0) * shift_params(S(Family::psi, n - 1), 1, beta_up), m));
      }
      if (n != -1) {
        CHECK(proportional_gauges(gauge_wronskian({S(Family::psi, -1), psi_n}),
                                  S(Family::psi, -1) * shift_params(S(Family::psi, n + 1), -1, -beta_up), m));
      }
      CHECK(proportional_gauges(gauge_wronskian({S(Family::phi, 0), psi_n}),
                                S(Family::phi, 0) * shift_params(psi_n, -1, beta_up), m));
      CHECK(proportional_gauges(gauge_wronskian({S(Family::phi, -1), psi_n}),
                                S(Family::phi, -1) * shift_params(psi_n, 1, -beta_up), m));
    }
  }
}

TEST_CASE("one-step moves at the polynomial level") {
  const auto ucs = random_ucs(30, 2, -3, 4, 11);
  for (Model m : {Model::laguerre, Model::jacobi}) {
    const int jb = m == Model::jacobi ? 1 : 0;
    for (const auto& uc : ucs) {
      INFO(to_string(m), " ", to_string(uc));
      const UniversalCharacter psi_left{shift_left(uc.psi), uc.phi};
      const UniversalCharacter psi_right{shift_right(uc.psi), uc.phi};
      const UniversalCharacter phi_left{uc.psi, shift_left(uc.phi)};
      const UniversalCharacter phi_right{uc.psi, shift_right(uc.phi)};
      CHECK(pw_ratio(m, uc, psi_left, 1, jb).has_value());
      CHECK(pw_ratio(m, uc, psi_right, -1, -jb).has_value());
      CHECK(pw_ratio(m, uc, phi_left, -1, jb).has_value());
      CHECK(pw_ratio(m, uc, phi_right, 1, -jb).has_value());
    }
  }
}

TEST_CASE("orbits give proportional pseudo-Wronskians") {
  const MayaDiagram phi = maya_from_entries({1});
  for (Model m : {Model::laguerre, Model::jacobi}) {
    const auto chain = orbit_diagrams(maya_from_entries({3, -1, -2}));
    UniversalCharacter canon;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const EquivalenceReport r = verify_equivalence(m, {chain[i], phi});
      CHECK(r.verified);
      if (i == 0) canon = r.canonical;
      CHECK(r.canonical == canon);
    }
  }
}

TEST_CASE("random characters satisfy the equivalence relation") {
  for (Model m : {Model::laguerre, Model::jacobi}) {
    for (const auto& uc : random_ucs(20, 2, -4, 5, 3)) {
      INFO(to_string(m), " ", to_string(uc));
      CHECK_FALSE(pseudo_wronskian(m, uc).is_zero());
      const EquivalenceReport r = verify_equivalence(m, uc);
      CHECK(r.verified);
      CHECK(r.exps == r.predicted_exps);
    }
  }
}

TEST_CASE("one-step potentials") {
  const UniversalCharacter none;
  const PotentialExpr base = extended_potential(Model::laguerre, none);
  CHECK(base.num * ZPoly(base_potential_den(Model::laguerre)) == base.den * base_potential_num(Model::laguerre));
  // Laguerre: psi_0, psi_{-1}, phi_0, phi_{-1}
  CHECK(differs_by_constant(extended_potential(Model::laguerre, make_uc({0}, {})), shift_params(base, 1, 0),
                            w * BigRational(2)));
  CHECK(differs_by_constant(extended_potential(Model::laguerre, make_uc({-1}, {})), shift_params(base, -1, 0),
                            w * BigRational(-2)));
  CHECK(differs_by_constant(extended_potential(Model::laguerre, make_uc({}, {0})), shift_params(base, -1, 0),
                            ParamPoly()));
  CHECK(differs_by_constant(extended_potential(Model::laguerre, make_uc({}, {-1})), shift_params(base, 1, 0),
                            ParamPoly()));
  CHECK_FALSE(differs_by_constant(extended_potential(Model::laguerre, make_uc({}, {-1})), shift_params(base, -1, 0),
                                  ParamPoly()));

  const PotentialExpr jbase = extended_potential(Model::jacobi, none);
  CHECK(differs_by_constant(extended_potential(Model::jacobi, make_uc({0}, {})), shift_params(jbase, 1, 1),
                            energy(Model::jacobi, Family::psi, 1)));
  CHECK(differs_by_constant(extended_potential(Model::jacobi, make_uc({-1}, {})), shift_params(jbase, -1, -1),
                            energy(Model::jacobi, Family::psi, -1)));
  CHECK(differs_by_constant(extended_potential(Model::jacobi, make_uc({}, {0})), shift_params(jbase, -1, 1),
                            ParamPoly()));
  CHECK(differs_by_constant(extended_potential(Model::jacobi, make_uc({}, {-1})), shift_params(jbase, 1, -1),
                            ParamPoly()));
}

TEST_CASE("potential equivalence") {
  PotentialReport r = verify_potential_equivalence(Model::laguerre, make_uc({4, 0}, {1}));
  CHECK(r.verified);
  CHECK(r.energy_shift.is_zero());
  r = verify_potential_equivalence(Model::laguerre, make_uc({-1}, {}));
  CHECK(r.verified);
  CHECK(r.energy_shift == w * BigRational(-2));
  CHECK(r.alpha_shift == -1);
  r = verify_potential_equivalence(Model::laguerre, kExample);
  CHECK(r.verified);
  CHECK(r.energy_shift == w * BigRational(-4));
  r = verify_potential_equivalence(Model::jacobi, kExample);
  CHECK(r.verified);
  CHECK(r.energy_shift == energy(Model::jacobi, Family::psi, -2));
  for (Model m : {Model::laguerre, Model::jacobi}) {
    for (const auto& uc : enumerate_ucs(2, -2, 2)) {
      INFO(to_string(m), " ", to_string(uc));
      CHECK(verify_potential_equivalence(m, uc).verified);
    }
  }
}
