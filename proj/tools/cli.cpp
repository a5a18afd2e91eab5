#include "cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pwe/classical.hpp"
#include "pwe/errors.hpp"
#include "pwe/json_io.hpp"
#include "pwe/pseudowronskian.hpp"
#include "pwe/sweep.hpp"

namespace pwe::cli {

namespace {

struct Options {
  std::string model = "laguerre";
  std::string psi;
  std::string phi;
  std::string entries;
  std::string format = "text";
  std::string range = "-3,3";
  std::string check = "equiv";
  int bound = 6;
  int max_size = 3;
  int count = 20;
  std::int64_t seed = -1;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool json_format(const Options& o) { return o.format == "json"; }

UniversalCharacter read_uc(const Options& o) { return make_uc(parse_int_list(o.psi), parse_int_list(o.phi)); }

std::string exponent_text(Model model, const std::array<int, 3>& exps) {
  std::ostringstream os;
  bool first = true;
  for (Base b : model_bases(model)) {
    os << (first ? "" : " ") << '(' << base_name(b) << ")^" << exps[static_cast<int>(b)];
    first = false;
  }
  return os.str();
}

std::string signed_int(int v) { return (v > 0 ? "+" : "") + std::to_string(v); }

int cmd_orbit(const Options& o, std::ostream& out) {
  const MayaDiagram m = maya_from_entries(parse_int_list(o.entries));
  const auto symbols = orbit(m);
  const auto diagrams = orbit_diagrams(m);
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "orbit";
    j["entries"] = to_json(m);
    Json chain = Json::array();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      chain.push_back({{"durfee", to_string(symbols[i])}, {"maya", to_json(diagrams[i])}});
    }
    j["chain"] = std::move(chain);
    emit(out, j);
    return kOk;
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out << to_string(symbols[i]) << "  " << to_string(diagrams[i]) << '\n';
  }
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const MayaDiagram m = maya_from_entries(parse_int_list(o.entries));
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "render";
    j["entries"] = to_json(m);
    j["durfee"] = to_string(durfee_from_maya(m));
    j["maya"] = render_maya(m);
    j["young"] = render_young(m);
    emit(out, j);
    return kOk;
  }
  out << "Durfee symbol " << to_string(durfee_from_maya(m)) << "\n\n" << render_maya(m) << '\n' << render_young(m);
  return kOk;
}

int cmd_pw(const Options& o, std::ostream& out) {
  const Model model = model_from_string(o.model);
  const UniversalCharacter uc = read_uc(o);
  const ZPoly pw = pseudo_wronskian(model, uc);
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "pseudo-wronskian";
    j["model"] = to_string(model);
    j["uc"] = to_json(uc);
    j["pw"] = to_json(pw);
    emit(out, j);
    return kOk;
  }
  out << pw.str() << '\n';
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const EquivalenceReport r = verify_equivalence(model_from_string(o.model), read_uc(o));
  if (json_format(o)) {
    emit(out, to_json(r));
  } else {
    out << "model      " << to_string(r.model) << '\n'
        << "source     " << to_string(r.source) << '\n'
        << "canonical  " << to_string(r.canonical) << '\n'
        << "shifts     alpha " << signed_int(r.alpha_shift) << ", beta " << signed_int(r.beta_shift) << '\n'
        << "exponents  " << exponent_text(r.model, r.exps) << '\n'
        << "predicted  " << exponent_text(r.model, r.predicted_exps) << '\n'
        << "constant   " << r.constant.str() << '\n'
        << "verified   " << (r.verified ? "true" : "false") << '\n'
        << "convention " << r.convention << '\n';
  }
  return r.verified ? kOk : kVerificationFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const OracleReport r = oracle_check(model_from_string(o.model), read_uc(o), o.bound);
  if (json_format(o)) {
    emit(out, to_json(r));
  } else {
    out << "model      " << to_string(r.model) << '\n'
        << "uc         " << to_string(r.uc) << '\n'
        << "W_z = c * " << exponent_text(r.model, r.factor.exps) << " * pw\n"
        << "c          " << r.factor.constant.str() << '\n'
        << "matched    " << (r.matched ? "true" : "false") << '\n';
  }
  return r.matched ? kOk : kVerificationFailed;
}

int cmd_potential(const Options& o, std::ostream& out) {
  const Model model = model_from_string(o.model);
  const UniversalCharacter uc = read_uc(o);
  const PotentialExpr v = extended_potential(model, uc);
  const PotentialReport r = verify_potential_equivalence(model, uc, o.bound);
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "potential-report";
    j["potential"] = to_json(v);
    j["equivalence"] = to_json(r);
    emit(out, j);
  } else {
    out << "model         " << to_string(model) << '\n'
        << "uc            " << to_string(uc) << '\n'
        << "V num         " << v.num.str() << '\n'
        << "V den         " << v.den.str() << '\n'
        << "canonical     " << to_string(r.canonical) << '\n'
        << "shifts        alpha " << signed_int(r.alpha_shift) << ", beta " << signed_int(r.beta_shift) << '\n'
        << "energy shift  " << r.energy_shift.str() << '\n'
        << "verified      " << (r.verified ? "true" : "false") << '\n';
  }
  return r.verified ? kOk : kVerificationFailed;
}

// One verification of the chosen kind; failures come back as a message.
bool check_one(const std::string& kind, Model model, const UniversalCharacter& uc, int bound, std::string& why) {
  try {
    if (kind == "equiv") return verify_equivalence(model, uc).verified;
    if (kind == "oracle") return oracle_check(model, uc, bound).matched;
    return verify_potential_equivalence(model, uc, bound).verified;
  } catch (const Error& e) {
    why = e.what();
    return false;
  }
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Model model = model_from_string(o.model);
  if (o.check != "equiv" && o.check != "oracle" && o.check != "potential") {
    throw ParseError("unknown check '" + o.check + "' (expected equiv, oracle or potential)");
  }
  const std::vector<int> range = parse_int_list(o.range);
  if (range.size() != 2 || range[0] > range[1]) throw ParseError("--range needs lo,hi with lo <= hi");
  if (o.max_size < 0) throw ParseError("--max-size must be non-negative");
  const std::vector<UniversalCharacter> ucs =
      o.seed >= 0 ? random_ucs(o.count, o.max_size, range[0], range[1], static_cast<std::uint64_t>(o.seed))
                  : enumerate_ucs(o.max_size, range[0], range[1]);
  Json results = Json::array();
  int passed = 0;
  for (const auto& uc : ucs) {
    std::string why;
    const bool ok = check_one(o.check, model, uc, o.bound, why);
    passed += ok ? 1 : 0;
    if (json_format(o)) {
      Json item;
      item["uc"] = to_json(uc);
      item["verified"] = ok;
      if (!why.empty()) item["error"] = why;
      results.push_back(std::move(item));
    } else {
      out << (ok ? "ok   " : "FAIL ") << to_string(uc);
      if (!why.empty()) out << "  " << why.substr(0, why.find('\n'));
      out << '\n';
    }
  }
  const bool all = passed == static_cast<int>(ucs.size());
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "sweep";
    j["model"] = to_string(model);
    j["check"] = o.check;
    j["range"] = range;
    j["max_size"] = o.max_size;
    if (o.seed >= 0) j["seed"] = o.seed;
    j["total"] = ucs.size();
    j["passed"] = passed;
    j["verified"] = all;
    j["results"] = std::move(results);
    emit(out, j);
  } else {
    out << passed << '/' << ucs.size() << " verified\n";
  }
  return all ? kOk : kVerificationFailed;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_uc(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "laguerre or jacobi");
  sub->add_option("--psi", o.psi, "psi indices, comma separated ('' for none)");
  sub->add_option("--phi", o.phi, "phi indices, comma separated ('' for none)");
  add_format(sub, o);
}

bool usage_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DuplicateIndex*>(&e) ||
         dynamic_cast<const InvalidDurfee*>(&e) || dynamic_cast<const DegenerateChain*>(&e) || dynamic_cast<const ShapeError*>(&e) ||
         dynamic_cast<const InvalidDegree*>(&e);
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last) throw ParseError("malformed integer list '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-Wronskians of Laguerre and Jacobi type indexed by pairs of Maya diagrams", "pwequiv"};
  app.require_subcommand(1);
  Options o;

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "Durfee-symbol and Maya chain of a shape class");
  orbit_cmd->add_option("--entries", o.entries, "Maya diagram entries")->required();
  add_format(orbit_cmd, o);

  CLI::App* render_cmd = app.add_subcommand("render", "ASCII Maya and punctured Young diagram");
  render_cmd->add_option("--entries", o.entries, "Maya diagram entries")->required();
  add_format(render_cmd, o);

  CLI::App* pw_cmd = app.add_subcommand("pw", "Pseudo-Wronskian polynomial");
  add_uc(pw_cmd, o);

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "Equivalence with the canonical representative");
  add_uc(equiv_cmd, o);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Compare with the gauge Wronskian of the seeds");
  add_uc(oracle_cmd, o);
  oracle_cmd->add_option("--bound", o.bound, "Largest number of seeds");

  CLI::App* potential_cmd = app.add_subcommand("potential", "Extended potential and its energy shift");
  add_uc(potential_cmd, o);
  potential_cmd->add_option("--bound", o.bound, "Largest number of seeds");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Check every small character, or a random sample");
  sweep_cmd->add_option("--model", o.model, "laguerre or jacobi");
  sweep_cmd->add_option("--max-size", o.max_size, "Largest m+r (per family with --seed)");
  sweep_cmd->add_option("--range", o.range, "Index range lo,hi");
  sweep_cmd->add_option("--check", o.check, "equiv, oracle or potential");
  sweep_cmd->add_option("--seed", o.seed, "Sample --count characters with this seed");
  sweep_cmd->add_option("--count", o.count, "Sample size with --seed");
  sweep_cmd->add_option("--bound", o.bound, "Largest number of seeds");
  add_format(sweep_cmd, o);

  // CLI11 takes the argument vector reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pwequiv: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (orbit_cmd->parsed()) return cmd_orbit(o, out);
    if (render_cmd->parsed()) return cmd_render(o, out);
    if (pw_cmd->parsed()) return cmd_pw(o, out);
    if (equiv_cmd->parsed()) return cmd_equiv(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
    if (potential_cmd->parsed()) return cmd_potential(o, out);
    return cmd_sweep(o, out);
  } catch (const Error& e) {
    err << "pwequiv: " << e.what() << '\n';
    return usage_error(e) ? kUsage : kVerificationFailed;
  }
}

}  // namespace pwe::cli
