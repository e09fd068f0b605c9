#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "isocrystal/error.hpp"
#include "isocrystal/global_datum.hpp"
#include "isocrystal/kottwitz_gl.hpp"
#include "isocrystal/kottwitz_unitary.hpp"
#include "isocrystal/lattice_isometry.hpp"
#include "isocrystal/trace_residue.hpp"
#include "json_io.hpp"

namespace isocrystal::cli {

namespace {

using json_io::Json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) parse_fail("bad integer '" + item + "' in list");
    } catch (const std::logic_error&) {
      parse_fail("bad integer '" + item + "' in list");
    }
  }
  if (out.empty()) parse_fail("empty integer list");
  return out;
}

// Flags shared by every command that takes an EL / unitary datum.
struct DatumFlags {
  std::optional<int> d;
  std::optional<int> n;
  std::optional<std::string> mu;
  std::optional<std::string> input;
  std::string group = "gl";

  void attach(CLI::App* cmd, bool with_group) {
    cmd->add_option("--d", d, "degree of the unramified base field");
    cmd->add_option("--n", n, "dimension");
    cmd->add_option("--mu", mu, "comma-separated a_0,...,a_{d-1}");
    cmd->add_option("--input", input, "JSON datum file {\"d\",\"n\",\"mu\"}");
    if (with_group) cmd->add_option("--group", group, "gl or unitary")->check(CLI::IsMember({"gl", "unitary"}));
  }

  Json payload() const {
    if (input) return json_io::read_file(*input);
    if (!d || !n || !mu) parse_fail("--d, --n and --mu are required (or --input)");
    return {{"d", *d}, {"n", *n}, {"mu", parse_int_list(*mu)}};
  }
  GLDatum gl() const { return json_io::gl_datum_from_json(payload()); }
  UnitaryDatum unitary() const { return json_io::unitary_datum_from_json(payload()); }
  bool is_unitary() const { return group == "unitary"; }
};

Json json_payload(const std::optional<std::string>& inline_json, const std::optional<std::string>& file,
                  const char* what) {
  if (file) return json_io::read_file(*file);
  if (inline_json) return json_io::parse(*inline_json);
  parse_fail(std::string(what) + " is required (inline JSON or --input)");
}

Json gl_classes_json(const std::vector<GLClass>& classes) {
  Json a = Json::array();
  for (const auto& c : classes) a.push_back(json_io::to_json(c));
  return a;
}

Json unitary_classes_json(const std::vector<UnitaryClass>& classes) {
  Json a = Json::array();
  for (const auto& c : classes) a.push_back(json_io::to_json(c));
  return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"isocrystal-kit: exact invariants of isocrystals with additional structure", "isocrystal-kit"};
  app.require_subcommand(1, 1);

  DatumFlags bg_gl, bg_unitary, basic, jgroup, rz, reflex, poset;
  auto* bg_gl_cmd = app.add_subcommand("bg-mu-gl", "enumerate B(G, mu) for Res_{F/Qp} GL_n");
  bg_gl.attach(bg_gl_cmd, false);
  auto* bg_u_cmd = app.add_subcommand("bg-mu-unitary", "enumerate B(G, mu) for an unramified unitary similitude group");
  bg_unitary.attach(bg_u_cmd, false);
  std::optional<std::string> parity;
  bg_u_cmd->add_option("--parity", parity, "even or odd (must match n)")->check(CLI::IsMember({"even", "odd"}));
  auto* basic_cmd = app.add_subcommand("basic", "the basic class of B(G, mu) and its J_b");
  basic.attach(basic_cmd, true);
  auto* jgroup_cmd = app.add_subcommand("j-group", "J_b and the Levi M_b of a class (default: the basic class)");
  jgroup.attach(jgroup_cmd, false);
  std::optional<std::string> class_json;
  jgroup_cmd->add_option("--class", class_json, "class JSON {\"slopes\":[{\"slope\",\"mult\"}]}");
  auto* rz_cmd = app.add_subcommand("rz-dim", "dimension of the Rapoport-Zink deformation space");
  rz.attach(rz_cmd, true);
  auto* reflex_cmd = app.add_subcommand("reflex", "degree of the local reflex field");
  reflex.attach(reflex_cmd, false);
  auto* poset_cmd = app.add_subcommand("poset", "closure order of the Newton stratification");
  poset.attach(poset_cmd, true);
  std::string format = "json";
  poset_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* trace_cmd = app.add_subcommand("trace-recover", "recover tr(u) from the series of tr(u v^{N+1})");
  std::optional<std::string> u_json, v_json, trace_input;
  int corrupt = 0;
  trace_cmd->add_option("--u", u_json, "matrix u as JSON rows");
  trace_cmd->add_option("--v", v_json, "invertible matrix v as JSON rows");
  trace_cmd->add_option("--corrupt", corrupt, "alter the first k series terms before recovery")->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--input", trace_input, "JSON file {\"u\",\"v\"}");

  auto* iso_cmd = app.add_subcommand("isometry", "lift a congruence between alternating forms to an isometry mod p^K");
  std::optional<long> iso_p;
  std::optional<int> iso_defect, iso_level, iso_target;
  std::optional<std::string> g1_json, g2_json, iso_input;
  iso_cmd->add_option("--p", iso_p, "prime");
  iso_cmd->add_option("--N", iso_defect, "duality defect");
  iso_cmd->add_option("--n", iso_level, "initial congruence level");
  iso_cmd->add_option("--K", iso_target, "target precision");
  iso_cmd->add_option("--g1", g1_json, "Gram matrix of the first form");
  iso_cmd->add_option("--g2", g2_json, "Gram matrix of the second form");
  iso_cmd->add_option("--input", iso_input, "JSON file {\"p\",\"N\",\"n\",\"K\",\"g1\",\"g2\"}");

  auto* global_cmd = app.add_subcommand("global-check", "existence of a global unitary group with given local behaviour");
  std::optional<std::string> profile_json, profile_input;
  global_cmd->add_option("--profile", profile_json, "profile JSON");
  global_cmd->add_option("--input", profile_input, "profile JSON file");

  auto* lift_cmd = app.add_subcommand("real-lift", "totally real lift of a polynomial congruent mod p^N");
  std::optional<std::string> poly_text, lift_input;
  std::optional<long> lift_p;
  std::optional<int> lift_precision, lift_bound;
  lift_cmd->add_option("--poly", poly_text, "coefficients, constant first, e.g. \"1,1,1\"");
  lift_cmd->add_option("--p", lift_p, "prime");
  lift_cmd->add_option("--precision", lift_precision, "N");
  lift_cmd->add_option("--bound", lift_bound, "coefficient search radius");
  lift_cmd->add_option("--input", lift_input, "JSON file {\"poly\",\"p\",\"precision\",\"bound\"}");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bg_gl_cmd->parsed()) {
      const GLDatum datum = bg_gl.gl();
      const HodgeData hodge = hodge_data(datum);
      emit(out, {{"datum", json_io::to_json(datum)},
                 {"mu1", hodge.mu1},
                 {"mu2", json_io::to_json(hodge.mu2)},
                 {"classes", gl_classes_json(enumerate_bg_mu(datum))}});
    } else if (bg_u_cmd->parsed()) {
      Json payload = bg_unitary.payload();
      if (parity) payload["parity"] = *parity;
      const UnitaryDatum datum = json_io::unitary_datum_from_json(payload);
      emit(out, {{"datum", json_io::to_json(datum)},
                 {"comparison_vector", json_io::to_json(comparison_vector(datum))},
                 {"classes", unitary_classes_json(enumerate_bg_mu_unitary(datum))}});
    } else if (basic_cmd->parsed()) {
      if (basic.is_unitary()) {
        const UnitaryDatum datum = basic.unitary();
        const UnitaryBasic b = basic_class_unitary(datum);
        emit(out, {{"datum", json_io::to_json(datum)},
                   {"class", json_io::to_json(b.basic)},
                   {"jb", {{"quasi_split", b.jb.quasi_split}, {"name", b.jb.name}}}});
      } else {
        const GLDatum datum = basic.gl();
        const GLClass b = basic_class(datum);
        emit(out, {{"datum", json_io::to_json(datum)},
                   {"class", json_io::to_json(b)},
                   {"j_group", json_io::to_json(j_group(b, datum.d()))}});
      }
    } else if (jgroup_cmd->parsed()) {
      GLClass c;
      int d = 0;
      if (class_json) {
        if (!jgroup.d && !jgroup.input) parse_fail("--d is required with --class");
        d = jgroup.input ? jgroup.gl().d() : *jgroup.d;
        c = json_io::gl_class_from_json(json_io::parse(*class_json), d);
      } else {
        const GLDatum datum = jgroup.gl();
        d = datum.d();
        c = basic_class(datum);
      }
      emit(out, {{"class", json_io::to_json(c)},
                 {"j_group", json_io::to_json(j_group(c, d))},
                 {"levi", json_io::to_json(levi_group(c, d))}});
    } else if (rz_cmd->parsed()) {
      const long dim = rz.is_unitary() ? rz_dimension_unitary(rz.unitary()) : rz_dimension(rz.gl());
      emit(out, {{"dimension", dim}});
    } else if (reflex_cmd->parsed()) {
      emit(out, {{"reflex_degree", reflex_degree(reflex.gl())}});
    } else if (poset_cmd->parsed()) {
      std::vector<NewtonPoint> points;
      Json nodes = Json::array();
      std::vector<CoverEdge> edges;
      if (poset.is_unitary()) {
        const UnitaryDatum datum = poset.unitary();
        const auto classes = enumerate_bg_mu_unitary(datum);
        for (const auto& c : classes) points.push_back(c.newton);
        nodes = unitary_classes_json(classes);
        edges = stratification_poset_unitary(datum);
      } else {
        const GLDatum datum = poset.gl();
        const auto classes = enumerate_bg_mu(datum);
        for (const auto& c : classes) points.push_back(c.newton);
        nodes = gl_classes_json(classes);
        edges = stratification_poset(datum);
      }
      if (format == "dot") {
        out << json_io::poset_dot(points, edges);
      } else {
        emit(out, json_io::poset_json(nodes, edges));
      }
    } else if (trace_cmd->parsed()) {
      Matrix u, v;
      if (trace_input) {
        const Json j = json_io::read_file(*trace_input);
        if (!j.contains("u") || !j.contains("v")) parse_fail("input needs \"u\" and \"v\"");
        u = json_io::matrix_from_json(j.at("u"));
        v = json_io::matrix_from_json(j.at("v"));
      } else {
        if (!u_json || !v_json) parse_fail("--u and --v are required (or --input)");
        u = json_io::matrix_from_json(json_io::parse(*u_json));
        v = json_io::matrix_from_json(json_io::parse(*v_json));
      }
      Rational trace;
      if (corrupt == 0) {
        trace = recover_trace(u, v);
      } else {
        const int n = static_cast<int>(u.rows());
        PowerTraceSeries s = power_traces(u, v, static_cast<std::size_t>(2 * n + 2 * corrupt));
        for (int i = 0; i < corrupt; ++i) s.coeffs[static_cast<std::size_t>(i)] += Rational(1000L * (i + 1));
        trace = recover_trace_from_tail(s, n, corrupt);
      }
      emit(out, {{"trace", json_io::to_json(trace)}, {"corrupted_terms", corrupt}});
    } else if (iso_cmd->parsed()) {
      Json j;
      if (iso_input) {
        j = json_io::read_file(*iso_input);
      } else {
        if (!iso_p || !iso_defect || !iso_level || !iso_target || !g1_json || !g2_json)
          parse_fail("--p, --N, --n, --K, --g1 and --g2 are required (or --input)");
        j = {{"p", *iso_p}, {"N", *iso_defect}, {"n", *iso_level}, {"K", *iso_target},
             {"g1", json_io::parse(*g1_json)}, {"g2", json_io::parse(*g2_json)}};
      }
      for (const char* key : {"p", "N", "n", "K", "g1", "g2"})
        if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
      if (!j["p"].is_number_integer() || !j["N"].is_number_integer() || !j["n"].is_number_integer() ||
          !j["K"].is_number_integer())
        parse_fail("p, N, n, K must be integers");
      const SymplecticLatticePair pair(Integer(j["p"].get<long>()), j["N"].get<int>(), j["n"].get<int>(),
                                       json_io::matrix_from_json(j["g1"]), json_io::matrix_from_json(j["g2"]));
      const IsometrySolution sol = solve_isometry(pair, j["K"].get<int>());
      emit(out, {{"g", json_io::to_json(sol.g)}, {"verified", sol.verified}, {"level", sol.level}, {"steps", sol.steps}});
    } else if (global_cmd->parsed()) {
      const auto profile = json_io::profile_from_json(json_payload(profile_json, profile_input, "--profile"));
      const GlobalExistence g = exists_global_unitary(profile);
      emit(out, {{"exists", g.exists},
                 {"witness",
                  {{"n_even", profile.n % 2 == 0},
                   {"A", g.witness.split_odd},
                   {"B", g.witness.inert_non_quasi_split},
                   {"lhs_mod2", g.witness.lhs_mod2},
                   {"rhs_mod2", g.witness.rhs_mod2}}}});
    } else if (lift_cmd->parsed()) {
      LiftProblem problem;
      if (lift_input) {
        const Json j = json_io::read_file(*lift_input);
        for (const char* key : {"poly", "p", "precision", "bound"})
          if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
        problem.target = json_io::polynomial_from_json(j.at("poly"));
        problem.p = Integer(j.at("p").get<long>());
        problem.precision = j.at("precision").get<int>();
        problem.bound = j.at("bound").get<int>();
      } else {
        if (!poly_text || !lift_p || !lift_precision || !lift_bound)
          parse_fail("--poly, --p, --precision and --bound are required (or --input)");
        std::vector<Rational> coeffs;
        for (int c : parse_int_list(*poly_text)) coeffs.emplace_back(c);
        problem.target = Polynomial(std::move(coeffs));
        problem.p = Integer(*lift_p);
        problem.precision = *lift_precision;
        problem.bound = *lift_bound;
      }
      const LiftResult r = find_real_rooted_lift(problem);
      emit(out, {{"polynomial", json_io::to_json(r.lift)},
                 {"sturm", json_io::to_json(r.certificate)},
                 {"verifiers",
                  {{"monic_same_degree", r.verification.monic_same_degree},
                   {"congruent", r.verification.congruent},
                   {"all_roots_real", r.verification.all_roots_real},
                   {"irreducible_mod_p", r.verification.irreducible_mod_p}}},
                 {"candidates_examined", r.candidates_examined}});
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    emit(out, {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}});
    err << e.what() << "\n";
    return kExitDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace isocrystal::cli
