#include "pwe/json_io.hpp"

#include "pwe/errors.hpp"

namespace pwe {

namespace {

Json exponents_json(Model model, const std::array<int, 3>& exps) {
  Json j = Json::object();
  for (Base b : model_bases(model)) j[base_name(b)] = exps[static_cast<int>(b)];
  return j;
}

std::array<int, 3> exponents_from_json(const Json& j) {
  std::array<int, 3> exps{};
  for (Base b : kAllBases) {
    if (j.contains(base_name(b))) exps[static_cast<int>(b)] = j.at(base_name(b)).get<int>();
  }
  return exps;
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace

Json to_json(const BigRational& q) { return rational_to_string(q); }

Json to_json(const ParamPoly& p) {
  Json arr = Json::array();
  for (const auto& t : p.terms()) {
    const Monomial m = t.mono();
    Json term;
    term["alpha"] = m.a;
    term["beta"] = m.b;
    term["omega"] = m.w;
    term["coef"] = rational_to_string(t.coef);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json to_json(const RatFunc& r) {
  Json j;
  j["num"] = to_json(r.num());
  j["den"] = to_json(r.den());
  return j;
}

Json to_json(const ZPoly& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    arr.push_back(Json::array({i, to_json(p.coeffs()[i])}));
  }
  return arr;
}

Json to_json(const MayaDiagram& m) { return m.entries(); }

Json to_json(const UniversalCharacter& uc) {
  Json j;
  j["psi"] = to_json(uc.psi);
  j["phi"] = to_json(uc.phi);
  return j;
}

Json to_json(const EquivalenceReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "equivalence";
  j["model"] = to_string(r.model);
  j["uc"] = to_json(r.source);
  j["canonical"] = to_json(r.canonical);
  j["shifts"] = {{"alpha", r.alpha_shift}, {"beta", r.beta_shift}};
  j["exponents"] = exponents_json(r.model, r.exps);
  j["predicted_exponents"] = exponents_json(r.model, r.predicted_exps);
  j["constant"] = to_json(r.constant);
  j["verified"] = r.verified;
  j["convention"] = r.convention;
  return j;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "oracle";
  j["model"] = to_string(r.model);
  j["uc"] = to_json(r.uc);
  j["exponents"] = exponents_json(r.model, r.factor.exps);
  j["constant"] = to_json(r.factor.constant);
  j["matched"] = r.matched;
  return j;
}

Json to_json(const PotentialExpr& v) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "potential";
  j["model"] = to_string(v.model);
  j["uc"] = to_json(v.uc);
  j["num"] = to_json(v.num);
  j["den"] = to_json(v.den);
  return j;
}

Json to_json(const PotentialReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "potential-equivalence";
  j["model"] = to_string(r.model);
  j["uc"] = to_json(r.uc);
  j["canonical"] = to_json(r.canonical);
  j["shifts"] = {{"alpha", r.alpha_shift}, {"beta", r.beta_shift}};
  j["energy_shift"] = to_json(r.energy_shift);
  j["verified"] = r.verified;
  return j;
}

BigRational rational_from_json(const Json& j) { return rational_from_string(j.get<std::string>()); }

ParamPoly param_poly_from_json(const Json& j) {
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : j) {
    const Monomial m{t.at("alpha").get<unsigned>(), t.at("beta").get<unsigned>(), t.at("omega").get<unsigned>()};
    terms.push_back({m.key(), rational_from_json(t.at("coef"))});
  }
  return ParamPoly::from_terms(std::move(terms));
}

RatFunc rat_func_from_json(const Json& j) {
  return RatFunc(param_poly_from_json(j.at("num")), param_poly_from_json(j.at("den")));
}

ZPoly zpoly_from_json(const Json& j) {
  std::vector<RatFunc> coeffs;
  for (const auto& entry : j) {
    const int power = entry.at(0).get<int>();
    if (power < 0) throw ParseError("negative power in polynomial JSON");
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[power] = rat_func_from_json(entry.at(1));
  }
  return ZPoly(std::move(coeffs));
}

UniversalCharacter uc_from_json(const Json& j) { return make_uc(ints(j.at("psi")), ints(j.at("phi"))); }

EquivalenceReport equivalence_report_from_json(const Json& j) {
  if (j.at("schema_version").get<std::string>() != kSchemaVersion) throw ParseError("unsupported schema version");
  EquivalenceReport r;
  r.model = model_from_string(j.at("model").get<std::string>());
  r.source = uc_from_json(j.at("uc"));
  r.canonical = uc_from_json(j.at("canonical"));
  r.alpha_shift = j.at("shifts").at("alpha").get<int>();
  r.beta_shift = j.at("shifts").at("beta").get<int>();
  r.exps = exponents_from_json(j.at("exponents"));
  r.predicted_exps = exponents_from_json(j.at("predicted_exponents"));
  r.constant = rat_func_from_json(j.at("constant"));
  r.verified = j.at("verified").get<bool>();
  r.convention = j.at("convention").get<std::string>();
  return r;
}

}  // namespace pwe
