#pragma once

#include <array>
#include <string>
#include <vector>

#include "pwe/classical.hpp"
#include "pwe/combinatorics.hpp"
#include "pwe/determinant.hpp"
#include "pwe/proportionality.hpp"

namespace pwe {

// Throws DegenerateChain when an index repeats within a family.
UniversalCharacter make_uc(const std::vector<int>& psi, const std::vector<int>& phi);

struct PseudoWronskianMatrix {
  Model model = Model::laguerre;
  UniversalCharacter uc;
  ZMatrix entries;
  std::vector<SeedSpec> row_labels;
};

// Row order: psi >= 0 ascending (n_k..n_1), psi < 0 in tuple order
// (nbar_kbar..nbar_1), then the same for phi. Column i is the derivative order.
std::vector<SeedSpec> row_labels(Model model, const UniversalCharacter& uc);
PseudoWronskianMatrix build_matrix(Model model, const UniversalCharacter& uc);
ZPoly pseudo_wronskian(Model model, const UniversalCharacter& uc);

// The bases a pseudo-Wronskian monomial factor may use: {z} or {1-z, 1+z}.
const std::vector<Base>& model_bases(Model model);

// Gauge that turns the pseudo-Wronskian into the Wronskian in z:
// W_z(seeds) = gauge * pw exactly.
GaugeFunction matrix_gauge(Model model, const UniversalCharacter& uc);

struct Canonical {
  UniversalCharacter uc;
  int alpha_shift = 0;
  int beta_shift = 0;
  std::array<int, 3> exps{};  // pw(uc) = c * prod base^exp * pw(canonical)(shifted)
};
Canonical canonicalize(Model model, const UniversalCharacter& uc);

// Sign and normalization conventions every report is stated under.
std::string report_convention();

struct EquivalenceReport {
  Model model = Model::laguerre;
  UniversalCharacter source;
  UniversalCharacter canonical;
  int alpha_shift = 0;
  int beta_shift = 0;
  std::array<int, 3> exps{};
  std::array<int, 3> predicted_exps{};
  RatFunc constant{1};
  bool verified = false;
  std::string convention;
};
EquivalenceReport verify_equivalence(Model model, const UniversalCharacter& uc);

struct OracleReport {
  Model model = Model::laguerre;
  UniversalCharacter uc;
  Proportionality factor;  // rational part of W_z = factor * pw
  bool matched = false;
};
OracleReport oracle_check(Model model, const UniversalCharacter& uc, int bound = 6);

// Full extended potential in z, num/den, base part included.
struct PotentialExpr {
  Model model = Model::laguerre;
  UniversalCharacter uc;
  ZPoly num;
  ZPoly den{1};
};
ZPoly base_potential_num(Model model);
ZPoly base_potential_den(Model model);
PotentialExpr extended_potential(Model model, const UniversalCharacter& uc);
PotentialExpr shift_params(const PotentialExpr& v, int alpha_shift, int beta_shift);
// True when a - b equals the constant c identically.
bool differs_by_constant(const PotentialExpr& a, const PotentialExpr& b, const ParamPoly& c);

struct PotentialReport {
  Model model = Model::laguerre;
  UniversalCharacter uc;
  UniversalCharacter canonical;
  int alpha_shift = 0;
  int beta_shift = 0;
  ParamPoly energy_shift;
  bool verified = false;
};
PotentialReport verify_potential_equivalence(Model model, const UniversalCharacter& uc, int bound = 6);

}  // namespace pwe
