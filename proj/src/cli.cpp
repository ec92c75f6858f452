#include "pplateau/cli.hpp"

#include "pplateau/flatnorm.hpp"
#include "pplateau/io.hpp"
#include "pplateau/slicer.hpp"
#include "pplateau/solver.hpp"
#include "pplateau/sunflower.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>

namespace pplateau {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "pplateau-out v1";

Scalar parse_number(std::string_view text, std::string_view what) {
  auto v = Scalar::parse(text);
  if (!v) throw ParseError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  return *v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Scalar> parse_list(const std::string& text, std::string_view what) {
  std::vector<Scalar> out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_number(s, what));
  return out;
}

ComplexPtr load_complex(const std::string& path) {
  if (path.empty()) throw ParseError("missing --complex");
  return parse_complex(read_file(path), path);
}

Integrand load_integrand(const std::string& path) {
  if (path.empty()) return Integrand::identity();
  return parse_integrand(read_file(path), path);
}

std::string compact(const Chain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [i, v] : c.terms()) {
    if (!out.empty()) out += ' ';
    out += c.complex()->cell(c.dim(), i).id + ":" + std::to_string(v);
  }
  return out;
}

std::string compact(const RationalChain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [i, v] : c.terms()) {
    if (!out.empty()) out += ' ';
    out += c.complex()->cell(c.dim(), i).id + ":" + to_string(v);
  }
  return out;
}

Json rational_chain_json(const RationalChain& c) {
  Json j = Json::object();
  for (const auto& [i, v] : c.terms()) j[c.complex()->cell(c.dim(), i).id] = to_string(v);
  return j;
}

Json report_json(const Report& r) {
  Json j = Json::array();
  for (const Issue& i : r)
    j.push_back({{"severity", i.severity == Issue::Severity::error ? "error" : "warning"}, {"kind", i.kind}, {"message", i.message}});
  return j;
}

void report_text(std::ostream& os, const Report& r) {
  for (const Issue& i : r)
    os << (i.severity == Issue::Severity::error ? "error" : "warning") << " [" << i.kind << "] " << i.message << '\n';
}

Json value_json(const EnergyValue& v) {
  return {{"h_mass", v.h_mass.str()}, {"pairing", v.pairing.str()}, {"energy", v.energy.str()}};
}

bool json_mode(const RunConfig& cfg) {
  if (cfg.emit == "json" || cfg.emit == "structured") return true;
  if (cfg.emit == "text") return false;
  throw ParseError("--emit must be text or json");
}

int cmd_solve(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const ComplexPtr cx = load_complex(cfg.complex);
  if (cfg.boundary.empty()) throw ParseError("missing --boundary");
  const Chain b = parse_chain(read_file(cfg.boundary), cx, cfg.boundary);
  const int m = b.dim() + 1;
  std::optional<Chain> t0;
  if (!cfg.t0.empty()) t0 = parse_chain(read_file(cfg.t0), cx, cfg.t0);
  const Cochain phi = cfg.phi.empty() ? Cochain(cx, m - 1) : parse_cochain(read_file(cfg.phi), cx, cfg.phi);
  Problem p = make_problem(b, phi, t0, load_integrand(cfg.integrand));
  p.max_minimizers = cfg.max_minimizers;
  if (cfg.cap != "auto") {
    const auto c = Scalar::parse(cfg.cap);
    if (!c || !c->exact() || denominator(c->to_rational()) != 1 || c->sign() < 0)
      throw ParseError("--cap must be a non-negative integer or auto");
    p.caps = std::vector<std::int64_t>(cx->cell_count(m), static_cast<std::int64_t>(numerator(c->to_rational())));
  }
  const Solution s = solve(p);
  if (cfg.verbosity > 0) err << "solve: " << s.nodes << " nodes\n";
  if (json_mode(cfg)) {
    Json j{{"schema", kSchema}, {"command", "solve"}, {"value", value_json(s.value)}};
    Json mins = Json::array();
    for (const Chain& c : s.minimizers) mins.push_back(write_chain(c));
    j["minimizers"] = mins;
    j["truncated"] = s.truncated;
    j["bounds_active"] = s.bounds_active;
    j["caps"] = s.caps;
    j["certificate"] = report_json(s.certificate);
    os << j.dump(2) << '\n';
  } else {
    os << "energy: " << s.value.energy.str() << '\n';
    os << "h_mass: " << s.value.h_mass.str() << '\n';
    os << "pairing: " << s.value.pairing.str() << '\n';
    os << "minimizers: " << s.minimizers.size() << (s.truncated ? " (truncated)" : "") << '\n';
    for (const Chain& c : s.minimizers) os << "  " << compact(c) << '\n';
    if (s.bounds_active) os << "note: coefficient caps are active; the value is an upper bound\n";
    report_text(os, s.certificate);
  }
  return has_errors(s.certificate) ? kExitDomain : kExitOk;
}

int cmd_flatnorm(const RunConfig& cfg, std::ostream& os) {
  const ComplexPtr cx = load_complex(cfg.complex);
  if (cfg.chain.empty()) throw ParseError("missing --chain");
  const Chain t = parse_chain(read_file(cfg.chain), cx, cfg.chain);
  const bool json = json_mode(cfg);
  Json j{{"schema", kSchema}, {"command", "flatnorm"}, {"mode", cfg.mode}};
  if (cfg.mode == "real") {
    const RealFlatCertificate r = flat_norm_real(t);
    if (json) {
      j["value"] = r.value.str();
      j["filling"] = rational_chain_json(r.filling);
      j["remainder"] = rational_chain_json(r.remainder);
    } else {
      os << "flat norm: " << r.value.str() << "\nfilling: " << compact(r.filling) << "\nremainder: " << compact(r.remainder)
         << '\n';
    }
  } else if (cfg.mode == "integral" || cfg.mode == "h") {
    if (cfg.flat_cap < 0) throw ParseError("--cap must be non-negative");
    const FlatCertificate r = cfg.mode == "integral" ? flat_distance_integral(t, cfg.flat_cap)
                                                     : h_flat_distance(t, load_integrand(cfg.integrand), cfg.flat_cap);
    if (json) {
      j["value"] = r.value.str();
      j["filling"] = write_chain(r.filling);
      j["remainder"] = write_chain(r.remainder);
      j["cap_active"] = r.cap_active;
    } else {
      os << (cfg.mode == "h" ? "H-flat distance: " : "integral flat norm: ") << r.value.str()
         << "\nfilling: " << compact(r.filling) << "\nremainder: " << compact(r.remainder) << '\n';
      if (r.cap_active) os << "note: the filling reaches the cap; the value is an upper bound\n";
    }
  } else {
    throw ParseError("--mode must be real, integral or h");
  }
  if (json) os << j.dump(2) << '\n';
  return kExitOk;
}

SunflowerSpec sunflower_spec(const RunConfig& cfg) {
  SunflowerSpec spec;
  if (cfg.petals < 1) throw ParseError("--petals must be positive");
  spec.petals = cfg.petals;
  spec.petal_phi = cfg.petal_phi.empty() ? std::vector<Scalar>(cfg.petals, Scalar(0)) : parse_list(cfg.petal_phi, "--phi");
  if (static_cast<int>(spec.petal_phi.size()) != cfg.petals)
    throw ParseError("--phi needs one value per petal (" + std::to_string(cfg.petals) + ")");
  spec.disk_pairing = parse_number(cfg.disk_pairing, "--disk-pairing");
  spec.disk_area = parse_number(cfg.disk_area, "--disk-area");
  if (!cfg.petal_areas.empty()) {
    spec.petal_areas = parse_list(cfg.petal_areas, "--petal-areas");
    if (static_cast<int>(spec.petal_areas.size()) != cfg.petals) throw ParseError("--petal-areas needs one value per petal");
  }
  if (cfg.variant.rfind("partial=", 0) == 0) {
    for (const std::string& s : split(cfg.variant.substr(8), ',')) {
      const auto v = Scalar::parse(s);
      if (!v || !v->exact() || denominator(v->to_rational()) != 1) throw ParseError("--variant: bad arc '" + s + "'");
      const auto arc = numerator(v->to_rational());
      if (arc < 1 || arc > cfg.petals) throw ParseError("--variant: arc " + s + " out of range 1.." + std::to_string(cfg.petals));
      spec.dropped_arcs.insert(static_cast<int>(arc) - 1);
    }
    if (spec.dropped_arcs.empty()) throw ParseError("--variant partial= needs at least one arc");
  } else if (cfg.variant != "full") {
    throw ParseError("--variant must be full or partial=<arc list>");
  }
  return spec;
}

std::string join_petals(const std::vector<int>& v) {
  std::string out;
  for (int i : v) out += (out.empty() ? "P" : ",P") + std::to_string(i + 1);
  return out.empty() ? "-" : out;
}

Json petals_json(const std::vector<int>& v) {
  Json j = Json::array();
  for (int i : v) j.push_back("P" + std::to_string(i + 1));
  return j;
}

int cmd_sunflower(const RunConfig& cfg, std::ostream& os) {
  const SunflowerScenario s = build_sunflower(sunflower_spec(cfg));
  const ClosedForm cf = closed_form_solutions(s, Integrand::identity(), cfg.max_minimizers);
  std::optional<bool> agrees;
  if (cfg.check) {
    Problem p = s.problem();
    p.max_minimizers = cfg.max_minimizers;
    const Solution sol = solve(p);
    agrees = sol.minimizers == cf.solution.minimizers && sol.value.energy == cf.solution.value.energy;
  }
  if (!cfg.write_scenario.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.write_scenario, ec);
    if (ec) throw ParseError(cfg.write_scenario + ": " + ec.message());
    const std::filesystem::path dir(cfg.write_scenario);
    write_file((dir / "sunflower.complex").string(), write_complex(*s.complex));
    write_file((dir / "boundary.chain").string(), write_chain(s.b));
    write_file((dir / "phi.cochain").string(), write_cochain(s.phi));
  }
  if (!cfg.render.empty()) write_file(cfg.render, render_sunflower_svg(s, &cf));
  std::vector<std::string> regimes;
  for (int a : cf.regimes) regimes.push_back("T" + std::to_string(a));
  if (json_mode(cfg)) {
    Json j{{"schema", kSchema}, {"command", "sunflower"}, {"petals", s.petals()}, {"variant", cfg.variant}};
    j["thresholds"] = {{"lambda_-2", cf.lambdas.lambda_m2.str()},
                       {"lambda_-1", cf.lambdas.lambda_m1.str()},
                       {"lambda_0", cf.lambdas.lambda_0.str()}};
    j["classes"] = {{"negative", petals_json(cf.classes.negatives)},
                    {"neutral", petals_json(cf.classes.neutrals)},
                    {"positive", petals_json(cf.classes.positives)}};
    j["regimes"] = regimes;
    j["value"] = value_json(cf.solution.value);
    Json mins = Json::array();
    for (const Chain& c : cf.solution.minimizers) mins.push_back(write_chain(c));
    j["minimizers"] = mins;
    j["truncated"] = cf.solution.truncated;
    if (agrees) j["solver_agrees"] = *agrees;
    os << j.dump(2) << '\n';
  } else {
    os << "petals: " << s.petals() << "  variant: " << cfg.variant << '\n';
    os << "thresholds: " << cf.lambdas.lambda_m2.str() << ' ' << cf.lambdas.lambda_m1.str() << ' '
       << cf.lambdas.lambda_0.str() << '\n';
    os << "classes: negative " << join_petals(cf.classes.negatives) << "  neutral " << join_petals(cf.classes.neutrals)
       << "  positive " << join_petals(cf.classes.positives) << '\n';
    os << "regime:";
    for (const std::string& r : regimes) os << ' ' << r;
    os << '\n';
    os << "energy: " << cf.solution.value.energy.str() << '\n';
    os << "minimizers: " << cf.solution.minimizers.size() << (cf.solution.truncated ? " (truncated)" : "") << '\n';
    for (const Chain& c : cf.solution.minimizers) os << "  " << compact(c) << '\n';
    if (agrees) os << "solver: " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  }
  return agrees && !*agrees ? kExitDomain : kExitOk;
}

int cmd_slice_check(const RunConfig& cfg, std::ostream& os) {
  if (!cfg.seed) throw ParseError("slice-check requires --seed");
  const Integrand h = load_integrand(cfg.integrand);
  PolyhedralChain t(2, 1);
  std::string what;
  if (!cfg.complex.empty() || !cfg.chain.empty()) {
    const ComplexPtr cx = load_complex(cfg.complex);
    if (cfg.chain.empty()) throw ParseError("missing --chain");
    t = embed(parse_chain(read_file(cfg.chain), cx, cfg.chain));
    what = cfg.chain;
  } else {
    t.add({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}, cfg.multiplicity);
    what = "unit segment, multiplicity " + std::to_string(cfg.multiplicity);
  }
  const double exact = h_mass(t, h);
  const McEstimate e = mc_h_mass(t, h, {cfg.samples, *cfg.seed, cfg.workers});
  const double error = exact != 0 ? std::abs(e.estimate - exact) / exact : std::abs(e.estimate);
  const bool pass = error <= cfg.tolerance;
  if (json_mode(cfg)) {
    Json j{{"schema", kSchema},         {"command", "slice-check"},        {"chain", what},
           {"integrand", h.describe()}, {"samples", e.samples},            {"seed", *cfg.seed},
           {"estimate", e.estimate},    {"standard_error", e.standard_error}, {"calibration", e.calibration},
           {"calibration_error", e.calibration_error}, {"closed_form", exact}, {"relative_error", error},
           {"tolerance", cfg.tolerance}, {"pass", pass}};
    os << j.dump(2) << '\n';
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "estimate: %.6f +/- %.6f\ncalibration: %.6f +/- %.6f\nclosed form: %.6f\n",
                  e.estimate, e.standard_error, e.calibration, e.calibration_error, exact);
    os << "chain: " << what << "\nintegrand: " << h.describe() << '\n' << line;
    std::snprintf(line, sizeof line, "relative error: %.4f (tolerance %.4f)\n", error, cfg.tolerance);
    os << line << (pass ? "PASS" : "FAIL") << '\n';
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& os) {
  const ComplexPtr cx = load_complex(cfg.complex);
  Report r = validate(*cx);
  if (!cfg.integrand.empty()) {
    const Report hr = validate_integrand(load_integrand(cfg.integrand));
    r.insert(r.end(), hr.begin(), hr.end());
  }
  if (json_mode(cfg)) {
    Json j{{"schema", kSchema}, {"command", "validate"}, {"valid", !has_errors(r)}, {"issues", report_json(r)}};
    os << j.dump(2) << '\n';
  } else {
    report_text(os, r);
    os << (has_errors(r) ? "invalid" : "valid") << '\n';
  }
  return has_errors(r) ? kExitDomain : kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  json_mode(cfg);
  if (cfg.subcommand == "solve") return cmd_solve(cfg, os, err);
  if (cfg.subcommand == "flatnorm") return cmd_flatnorm(cfg, os);
  if (cfg.subcommand == "sunflower") return cmd_sunflower(cfg, os);
  if (cfg.subcommand == "slice-check") return cmd_slice_check(cfg, os);
  if (cfg.subcommand == "validate") return cmd_validate(cfg, os);
  throw ParseError("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buf;
    const int code = dispatch(cfg, buf, err);
    if (cfg.output.empty()) out << buf.str();
    else write_file(cfg.output, buf.str());
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete partial Plateau problems, flat norms and slicing", "pplateau"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--emit", cfg.emit, "Output format: text or json")->check(CLI::IsMember({"text", "json", "structured"}));
    sub->add_option("-o,--output", cfg.output, "Write output to this file instead of standard output");
    sub->add_flag("-v,--verbose", cfg.verbosity, "Print progress details to standard error");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Minimize M_H(T) - dT(phi) subject to d(T - T0) being a subcurrent of B");
  solve_cmd->add_option("--complex", cfg.complex, "Cell complex file")->required();
  solve_cmd->add_option("--boundary", cfg.boundary, "Boundary limit B as a chain file")->required();
  solve_cmd->add_option("--t0", cfg.t0, "Reference chain T0 (default 0)");
  solve_cmd->add_option("--phi", cfg.phi, "Cochain phi on (m-1)-cells (default 0)");
  solve_cmd->add_option("--integrand", cfg.integrand, "Integrand file (default identity)");
  solve_cmd->add_option("--cap", cfg.cap, "Coefficient bound per cell: an integer or auto")->capture_default_str();
  solve_cmd->add_option("--max-minimizers", cfg.max_minimizers, "Largest number of tied minimizers to report")
      ->capture_default_str();
  common(solve_cmd);

  auto* flat_cmd = app.add_subcommand("flatnorm", "Flat norm or H-flat distance of a chain");
  flat_cmd->add_option("--complex", cfg.complex, "Cell complex file")->required();
  flat_cmd->add_option("--chain", cfg.chain, "Chain file")->required();
  flat_cmd->add_option("--mode", cfg.mode, "real, integral or h")->capture_default_str();
  flat_cmd->add_option("--cap", cfg.flat_cap, "Bound on filling coefficients (integral and h modes)")->capture_default_str();
  flat_cmd->add_option("--integrand", cfg.integrand, "Integrand file for h mode (default identity)");
  common(flat_cmd);

  auto* sun_cmd = app.add_subcommand("sunflower", "Closed-form solutions of the sunflower scenario");
  sun_cmd->add_option("--petals", cfg.petals, "Number of petals")->capture_default_str();
  sun_cmd->add_option("--phi", cfg.petal_phi, "Comma separated petal pairings dP_i(phi) (default all 0)");
  sun_cmd->add_option("--disk-pairing", cfg.disk_pairing, "Disk pairing dD(phi)")->capture_default_str();
  sun_cmd->add_option("--disk-area", cfg.disk_area, "Area of the disk")->capture_default_str();
  sun_cmd->add_option("--petal-areas", cfg.petal_areas, "Comma separated petal areas (default 1 each)");
  sun_cmd->add_option("--variant", cfg.variant, "full, or partial=<arcs> dropping the listed 1-based outer arcs")
      ->capture_default_str();
  sun_cmd->add_option("--render", cfg.render, "Write an SVG figure to this path");
  sun_cmd->add_option("--write-scenario", cfg.write_scenario,
                      "Write sunflower.complex, boundary.chain and phi.cochain into this directory");
  sun_cmd->add_option("--max-minimizers", cfg.max_minimizers, "Largest number of tied minimizers to report")
      ->capture_default_str();
  sun_cmd->add_flag("--check", cfg.check, "Also run the general solver and compare");
  common(sun_cmd);

  auto* slice_cmd = app.add_subcommand("slice-check", "Monte Carlo slice estimate of M_H against the exact value");
  slice_cmd->add_option("--samples", cfg.samples, "Number of (projection, level) samples")->capture_default_str();
  slice_cmd->add_option("--seed", cfg.seed, "Random seed (required)")->required();
  slice_cmd->add_option("--integrand", cfg.integrand, "Integrand file (default identity)");
  slice_cmd->add_option("--complex", cfg.complex, "Complex with vertex coordinates (default: built-in unit segment)");
  slice_cmd->add_option("--chain", cfg.chain, "Chain on --complex to embed and estimate");
  slice_cmd->add_option("--multiplicity", cfg.multiplicity, "Multiplicity of the built-in unit segment")->capture_default_str();
  slice_cmd->add_option("--workers", cfg.workers, "Worker threads; results do not depend on this")->capture_default_str();
  slice_cmd->add_option("--tolerance", cfg.tolerance, "Relative tolerance for PASS")->capture_default_str();
  common(slice_cmd);

  auto* val_cmd = app.add_subcommand("validate", "Check a complex (and optionally an integrand) for consistency");
  val_cmd->add_option("complex", cfg.complex, "Cell complex file")->required();
  val_cmd->add_option("--integrand", cfg.integrand, "Integrand file to check as well");
  common(val_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace pplateau
