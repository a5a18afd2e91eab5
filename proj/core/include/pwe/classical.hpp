#pragma once

#include <string>
#include <vector>

#include "pwe/gauge.hpp"

namespace pwe {

enum class Model { laguerre, jacobi };
enum class Family { psi, phi };

std::string to_string(Model m);
Model model_from_string(const std::string& s);  // throws ParseError

struct SeedSpec {
  Model model = Model::laguerre;
  Family family = Family::psi;
  int index = 0;

  // Degree of the polynomial part: index for index >= 0, -index-1 otherwise.
  int degree() const { return index >= 0 ? index : -index - 1; }
  auto operator<=>(const SeedSpec&) const = default;
};

std::string to_string(const SeedSpec& s);

// L_n^{a}(sign*z) with a an arbitrary parameter polynomial.
ZPoly laguerre_poly(int n, const ParamPoly& a, int arg_sign);
// P_n^{(a,b)}(sign*z).
ZPoly jacobi_poly(int n, const ParamPoly& a, const ParamPoly& b, int arg_sign);

// L_n^{(+-alpha) + s}(+-z).
ZPoly laguerre(int n, int alpha_shift, int arg_sign, bool negate_alpha = false);
// P_n^{(+-alpha + s1, +-beta + s2)}(+-z).
ZPoly jacobi(int n, int alpha_shift, int beta_shift, int arg_sign, bool negate_alpha = false,
             bool negate_beta = false);

// Quasi-polynomial formal eigenfunction; all integer indices are legal.
GaugeFunction seed(const SeedSpec& spec);

// Energy of the seed. Laguerre energies carry omega; Jacobi ones are in alpha, beta.
ParamPoly energy(const SeedSpec& spec);
inline ParamPoly energy(Model model, Family family, int index) { return energy(SeedSpec{model, family, index}); }

// Discrete parameter symmetries acting on a gauge function.
// Laguerre: g1 reflects z (omega -> -omega), g2 negates alpha, g3 = g1 o g2.
// Jacobi: g1 negates beta, g2 negates alpha, g3 = g1 o g2.
GaugeFunction gamma1(Model model, const GaugeFunction& g);
GaugeFunction gamma2(Model model, const GaugeFunction& g);
GaugeFunction gamma3(Model model, const GaugeFunction& g);

// Shift alpha and beta inside a gauge function (exponents and rational part).
GaugeFunction shift_params(const GaugeFunction& g, int alpha_shift, int beta_shift);

// Closed-form k-th derivatives of the four gauge-dressed polynomial families of
// each model, checked against repeated symbolic differentiation.
struct IdentityCheck {
  Model model = Model::laguerre;
  std::string family;  // eigen, conjugate, shadow, conjugate_shadow
  int n = 0;
  int k = 0;
  bool passed = false;
};

std::vector<IdentityCheck> derivative_identities(int n_max, int k_max);

}  // namespace pwe
