#include "shamsuddin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <sstream>

#include "shamsuddin/dynamics.hpp"
#include "shamsuddin/expr.hpp"
#include "shamsuddin/isotropy.hpp"
#include "shamsuddin/polyring.hpp"
#include "shamsuddin/simplicity.hpp"

namespace shamsuddin {

namespace {

using Json = nlohmann::ordered_json;

// Bad or missing input; reported with exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T parse_input(const std::string& flag, const std::string& text, T (*parser)(std::string_view)) {
  try {
    return parser(text);
  } catch (const ParseError& e) {
    throw InputError(flag + ": " + render(e, text));
  }
}

const std::string& required(const std::optional<std::string>& value, const std::string& flag) {
  if (!value) throw InputError("missing required option " + flag);
  return *value;
}

UPoly read_univariate(const std::string& flag, const std::string& text) {
  BPoly p = parse_input(flag, text, parse_poly);
  auto u = p.as_upoly(Var::x);
  if (!u) throw InputError(flag + ": y not allowed in a Shamsuddin coefficient");
  return *u;
}

ShamsuddinForm read_form(const CliConfig& c) {
  if (c.derivation) {
    const Derivation d = parse_input("--derivation", *c.derivation, parse_derivation);
    auto sf = to_shamsuddin(d);
    if (!sf) throw OperationError("derivation is not of the form d/dx + (a(x)*y + b(x)) d/dy");
    return *sf;
  }
  return ShamsuddinForm{read_univariate("--a", required(c.a, "--a")), read_univariate("--b", required(c.b, "--b"))};
}

Derivation read_derivation(const CliConfig& c) {
  return parse_input("--derivation", required(c.derivation, "--derivation"), parse_derivation);
}

PolyMap read_map(const CliConfig& c) { return parse_input("--map", required(c.map, "--map"), parse_map); }

std::vector<BigRat> parse_grid(const std::string& spec) {
  std::vector<BigRat> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    try {
      grid.push_back(parse_rat(item));
    } catch (const std::invalid_argument&) {
      throw InputError("--grid: malformed rational '" + item + "'");
    }
  }
  if (grid.empty()) throw InputError("--grid: empty coefficient grid");
  return grid;
}

Json witness_json(const DarbouxWitness& w) { return Json{{"f", format(w.f)}, {"cofactor", format(w.cofactor)}}; }

Json form_json(const ShamsuddinForm& sf) {
  return Json{{"a", format(sf.a)}, {"b", format(sf.b)}, {"derivation", format(sf.to_derivation())}};
}

std::string join_doubles(const std::vector<double>& v) {
  std::ostringstream os;
  os << std::setprecision(10);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

struct Output {
  const CliConfig& config;
  std::ostream& out;
  bool json() const { return config.format == "json"; }
  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

// ---------------------------------------------------------------------------

void cmd_simple_check(const Output& o) {
  const ShamsuddinForm sf = read_form(o.config);
  const Derivation d = sf.to_derivation();
  const SimplicityVerdict v = shamsuddin_is_simple(sf);
  if (const auto* ns = std::get_if<NotSimple>(&v)) {
    const bool ok = ns->witness.verify(d);
    if (o.json()) {
      o.emit(Json{{"command", "simple-check"}, {"form", form_json(sf)}, {"verdict", "NotSimple"},
                  {"witness", witness_json(ns->witness)}, {"verified", ok}});
      return;
    }
    o.out << "NotSimple\n"
          << "witness: " << format(ns->witness.f) << "\n"
          << "cofactor: " << format(ns->witness.cofactor) << "\n";
    if (o.config.verify) o.out << "verified: " << (ok ? "true" : "false") << "\n";
    return;
  }
  // Any solution has degree at most deg b + 1, so the bounded oracle is conclusive.
  const int bound = sf.b.degree().value_or(0) + 1;
  const bool ok = !has_solution(ode_brute_oracle(sf.a, sf.b, bound));
  if (o.json()) {
    o.emit(Json{{"command", "simple-check"}, {"form", form_json(sf)}, {"verdict", "Simple"}, {"witness", nullptr},
                {"verified", ok}});
    return;
  }
  o.out << "Simple\n";
  if (o.config.verify) o.out << "verified: " << (ok ? "true" : "false") << "\n";
}

void cmd_isotropy(const Output& o) {
  const ShamsuddinForm sf = read_form(o.config);
  const IsotropyCertificate cert = shamsuddin_isotropy(sf);
  if (o.json()) {
    Json steps = Json::array();
    for (const auto& s : cert.steps) {
      Json checks = Json::array();
      for (const auto& c : s.checks) checks.push_back(Json{{"description", c.description}, {"holds", c.holds}});
      steps.push_back(Json{{"id", s.id}, {"claim", s.claim}, {"checks", checks}, {"verified", s.verified()}});
    }
    o.emit(Json{{"command", "isotropy"}, {"form", form_json(sf)}, {"verdict", cert.conclusion},
                {"conclusion", cert.conclusion}, {"steps", steps}, {"verified", cert.verified()}});
    return;
  }
  o.out << "derivation: " << format(sf.to_derivation()) << "\n";
  for (const auto& s : cert.steps) {
    o.out << s.id << ": " << s.claim << "\n";
    for (const auto& c : s.checks) o.out << "  [" << (c.holds ? "ok" : "FAILED") << "] " << c.description << "\n";
  }
  o.out << "conclusion: " << cert.conclusion << " (isotropy group = {id})\n";
  if (o.config.verify) o.out << "verified: " << (cert.verified() ? "true" : "false") << "\n";
}

void cmd_isotropy_brute(const Output& o) {
  const Derivation d = read_derivation(o.config);
  SearchBox box;
  box.deg_bound = o.config.deg_bound;
  box.grid = parse_grid(o.config.grid);
  box.pair_budget = o.config.pair_budget;
  const IsotropyEnumeration e = brute_force_isotropy(d, box);
  std::vector<bool> verified;
  for (const auto& m : e.found) {
    const BPoly j = m.jacobian_determinant();
    verified.push_back(j.is_constant() && !j.is_zero() && commutes(d, m));
  }
  const bool all = std::all_of(verified.begin(), verified.end(), [](bool b) { return b; });
  if (o.json()) {
    Json maps = Json::array();
    for (const auto& m : e.found) maps.push_back(format(m));
    o.emit(Json{{"command", "isotropy-brute"}, {"derivation", format(d)}, {"deg_bound", box.deg_bound},
                {"grid", o.config.grid}, {"candidate_pairs", e.candidate_pairs}, {"count", e.found.size()},
                {"maps", maps}, {"verified", verified}});
    return;
  }
  o.out << "found " << e.found.size() << " commuting map" << (e.found.size() == 1 ? "" : "s") << " among "
        << e.candidate_pairs << " candidates\n";
  for (const auto& m : e.found) o.out << format(m) << "\n";
  if (o.config.verify) o.out << "verified: " << (all ? "true" : "false") << "\n";
}

void cmd_commute_check(const Output& o) {
  const Derivation d = read_derivation(o.config);
  const PolyMap rho = read_map(o.config);
  const bool on_x = substitute(d.dx, rho.f, rho.g) == apply(d, rho.f);
  const bool on_y = substitute(d.dy, rho.f, rho.g) == apply(d, rho.g);
  const bool result = commutes(d, rho);
  if (o.json()) {
    o.emit(Json{{"command", "commute-check"}, {"derivation", format(d)}, {"map", format(rho)}, {"verdict", result},
                {"checks", Json{{"x", on_x}, {"y", on_y}}}, {"verified", result == (on_x && on_y)}});
    return;
  }
  o.out << (result ? "true" : "false") << "\n";
}

void cmd_invariant_check(const Output& o) {
  const Derivation d = read_derivation(o.config);
  const BPoly f = parse_input("--poly", required(o.config.poly, "--poly"), parse_poly);
  const auto w = invariant_check(d, f);
  if (o.json()) {
    o.emit(Json{{"command", "invariant-check"}, {"derivation", format(d)}, {"poly", format(f)},
                {"verdict", w ? "invariant" : "not invariant"}, {"witness", w ? witness_json(*w) : Json(nullptr)},
                {"verified", w ? w->verify(d) : true}});
    return;
  }
  if (w) {
    o.out << "invariant\ncofactor: " << format(w->cofactor) << "\n";
    if (o.config.verify) o.out << "verified: " << (w->verify(d) ? "true" : "false") << "\n";
  } else {
    o.out << "not invariant\n";
  }
}

void cmd_dyn_degree(const Output& o) {
  const PolyMap rho = read_map(o.config);
  const DynDegreeEstimate est = degree_sequence(rho, o.config.n_max);
  if (o.json()) {
    o.emit(Json{{"command", "dyn-degree"}, {"map", format(rho)}, {"degree_sequence", est.degree_sequence},
                {"per_step_roots", est.per_step_roots}, {"bounded", est.bounded},
                {"delta_estimate", est.delta_estimate.get_str()}});
    return;
  }
  std::ostringstream degrees;
  for (std::size_t i = 0; i < est.degree_sequence.size(); ++i) degrees << (i ? " " : "") << est.degree_sequence[i];
  o.out << "degrees: " << degrees.str() << "\n"
        << "per-step roots: " << join_doubles(est.per_step_roots) << "\n"
        << "bounded: " << (est.bounded ? "true" : "false") << "\n"
        << "delta estimate: " << est.delta_estimate.get_str() << "\n";
}

void cmd_fixed_points(const Output& o) {
  const PolyMap rho = read_map(o.config);
  const FixedPointReport r = fixed_points(rho);
  std::vector<bool> verified;
  for (const auto& [x0, y0] : r.rational_points) {
    verified.push_back(rho.f.evaluate(x0, y0) == x0 && rho.g.evaluate(x0, y0) == y0);
  }
  if (o.json()) {
    Json points = Json::array();
    for (const auto& [x0, y0] : r.rational_points) points.push_back(Json::array({x0.get_str(), y0.get_str()}));
    o.emit(Json{{"command", "fixed-points"}, {"map", format(rho)}, {"rational_points", points},
                {"closure_verdict", to_string(r.closure_verdict)}, {"verified", verified}});
    return;
  }
  o.out << "rational points:";
  if (r.rational_points.empty()) o.out << " none";
  for (const auto& [x0, y0] : r.rational_points) o.out << " (" << x0.get_str() << ", " << y0.get_str() << ")";
  o.out << "\nclosure: " << to_string(r.closure_verdict) << "\n";
  if (o.config.verify) {
    const bool all = std::all_of(verified.begin(), verified.end(), [](bool b) { return b; });
    o.out << "verified: " << (all ? "true" : "false") << "\n";
  }
}

void cmd_order(const Output& o) {
  const PolyMap rho = read_map(o.config);
  const auto n = order_detect(rho, o.config.n_max);
  if (o.json()) {
    o.emit(Json{{"command", "order"}, {"map", format(rho)}, {"n_max", o.config.n_max},
                {"order", n ? Json(*n) : Json(nullptr)}});
    return;
  }
  if (n) {
    o.out << "order: " << *n << "\n";
  } else {
    o.out << "order: none up to " << o.config.n_max << "\n";
  }
}

void cmd_validate_aut(const Output& o) {
  const PolyMap rho = read_map(o.config);
  const AutomorphismVerdict v = validate_automorphism(rho);
  if (const auto* rej = std::get_if<AutomorphismRejection>(&v)) {
    if (o.json()) {
      o.emit(Json{{"command", "validate-aut"}, {"map", format(rho)}, {"verdict", "rejected"},
                  {"jacobian_det", format(rej->jacobian_det)}});
      return;
    }
    o.out << "rejected\njacobian: " << format(rej->jacobian_det) << "\n";
    return;
  }
  const auto& cert = std::get<AutomorphismCert>(v);
  if (o.json()) {
    o.emit(Json{{"command", "validate-aut"}, {"map", format(rho)}, {"verdict", "accepted"},
                {"jacobian_det", cert.jacobian_det.get_str()},
                {"inverse", cert.inverse ? Json(format(*cert.inverse)) : Json(nullptr)},
                {"necessary_condition_only", cert.necessary_condition_only()}, {"verified", cert.verify()}});
    return;
  }
  o.out << "accepted\njacobian: " << cert.jacobian_det.get_str() << "\n";
  if (cert.inverse) {
    o.out << "inverse: " << format(*cert.inverse) << "\n";
  } else {
    o.out << "inverse: unknown (constant Jacobian is a necessary condition only)\n";
  }
  if (o.config.verify) o.out << "verified: " << (cert.verify() ? "true" : "false") << "\n";
}

const std::map<std::string, std::function<void(const Output&)>>& commands() {
  static const std::map<std::string, std::function<void(const Output&)>> table{
      {"simple-check", cmd_simple_check},   {"isotropy", cmd_isotropy},
      {"isotropy-brute", cmd_isotropy_brute}, {"commute-check", cmd_commute_check},
      {"invariant-check", cmd_invariant_check}, {"dyn-degree", cmd_dyn_degree},
      {"fixed-points", cmd_fixed_points},   {"order", cmd_order},
      {"validate-aut", cmd_validate_aut},
  };
  return table;
}

ExitStatus fail(const Output& o, ExitStatus status, const std::string& message, const Json& extra = Json::object()) {
  if (o.json()) {
    Json j{{"command", o.config.subcommand}, {"error", message}, {"status", static_cast<int>(status)}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    o.emit(j);
  } else {
    o.out.flush();
  }
  return status;
}

}  // namespace

ExitStatus run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Output o{config, out};
  auto it = commands().find(config.subcommand);
  if (it == commands().end()) {
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return ExitStatus::UsageError;
  }
  try {
    it->second(o);
    return ExitStatus::Verdict;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return fail(o, ExitStatus::UsageError, e.what());
  } catch (const NotSimpleError& e) {
    err << "error: " << e.what() << "; invariant ideal (" << format(e.witness().f) << "), cofactor "
        << format(e.witness().cofactor) << "\n";
    return fail(o, ExitStatus::OperationFailed, e.what(), Json{{"witness", witness_json(e.witness())}});
  } catch (const OperationError& e) {
    err << "error: " << e.what() << "\n";
    return fail(o, ExitStatus::OperationFailed, e.what());
  }
}

ExitStatus run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Simplicity, isotropy and dynamics of plane polynomial derivations and maps", "shamsuddin"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verify", config.verify, "Recompute witness identities and report them");
  };
  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--a", config.a, "a(x) in d/dx + (a*y + b) d/dy");
    sub->add_option("--b", config.b, "b(x) in d/dx + (a*y + b) d/dy");
    sub->add_option("--derivation", config.derivation, "Derivation, e.g. \"dx=1; dy=x*y + 1\"");
  };
  auto n_max_option = [&](CLI::App* sub) {
    sub->add_option("--n-max", config.n_max, "Number of iterates")->check(CLI::Range(1, 64));
  };

  auto* simple = app.add_subcommand("simple-check", "Decide simplicity of a Shamsuddin derivation");
  add_form(simple);
  add_format(simple);

  auto* iso = app.add_subcommand("isotropy", "Certify the isotropy group of a simple Shamsuddin derivation");
  add_form(iso);
  add_format(iso);

  auto* brute = app.add_subcommand("isotropy-brute", "Enumerate commuting automorphisms in a finite box");
  brute->add_option("--derivation", config.derivation, "Derivation, e.g. \"dx=1; dy=0\"");
  brute->add_option("--deg-bound", config.deg_bound, "Total degree bound")->check(CLI::Range(1, 6));
  brute->add_option("--grid", config.grid, "Comma-separated coefficient grid");
  brute->add_option("--budget", config.pair_budget, "Maximum number of candidate pairs");
  add_format(brute);

  auto* commute = app.add_subcommand("commute-check", "Check rho D = D rho");
  commute->add_option("--derivation", config.derivation, "Derivation");
  commute->add_option("--map", config.map, "Map, e.g. \"(x + y^2, y)\"");
  add_format(commute);

  auto* invariant = app.add_subcommand("invariant-check", "Check whether (f) is D-stable");
  invariant->add_option("--derivation", config.derivation, "Derivation");
  invariant->add_option("--poly", config.poly, "Polynomial f");
  add_format(invariant);

  auto* dyn = app.add_subcommand("dyn-degree", "Degree sequence and dynamical degree estimate");
  dyn->add_option("--map", config.map, "Map");
  n_max_option(dyn);
  add_format(dyn);

  auto* fixed = app.add_subcommand("fixed-points", "Fixed points of a map");
  fixed->add_option("--map", config.map, "Map");
  add_format(fixed);

  auto* order = app.add_subcommand("order", "Smallest n <= n-max with rho^n = id");
  order->add_option("--map", config.map, "Map");
  n_max_option(order);
  add_format(order);

  auto* aut = app.add_subcommand("validate-aut", "Check the Jacobian criterion and build an inverse");
  aut->add_option("--map", config.map, "Map");
  add_format(aut);

  std::vector<const char*> argv{"shamsuddin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitStatus::Verdict : ExitStatus::UsageError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace shamsuddin
