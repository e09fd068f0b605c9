#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "isocrystal/error.hpp"

namespace isocrystal::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Json to_json(const Rational& x) { return x.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rational must be a string \"num/den\" or an integer");
}

Json to_json(const NewtonPoint& nu) {
  Json a = Json::array();
  for (const auto& x : nu.entries()) a.push_back(to_json(x));
  return a;
}

NewtonPoint newton_from_json(const Json& j) {
  if (!j.is_array()) fail("Newton point must be an array");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return NewtonPoint(std::move(v));
}

Json to_json(const SlopeDatum& s) {
  Json a = Json::array();
  for (const auto& b : s.blocks()) a.push_back({{"slope", to_json(b.slope)}, {"mult", b.multiplicity}});
  return a;
}

SlopeDatum slopes_from_json(const Json& j) {
  if (!j.is_array()) fail("slopes must be an array");
  std::vector<SlopeBlock> blocks;
  for (const auto& b : j) blocks.push_back({rational_from_json(field(b, "slope")), int_from_json(field(b, "mult"), "mult")});
  return SlopeDatum(std::move(blocks));
}

Json to_json(const GLDatum& datum) { return {{"d", datum.d()}, {"n", datum.n()}, {"mu", datum.mu()}}; }

GLDatum gl_datum_from_json(const Json& j) {
  return GLDatum(int_from_json(field(j, "d"), "d"), int_from_json(field(j, "n"), "n"), int_list(field(j, "mu"), "mu"));
}

Json to_json(const UnitaryDatum& datum) {
  return {{"d", datum.d()}, {"n", datum.n()}, {"parity", parity_name(datum.parity())}, {"mu", datum.mu()}};
}

UnitaryDatum unitary_datum_from_json(const Json& j) {
  const int d = int_from_json(field(j, "d"), "d");
  const int n = int_from_json(field(j, "n"), "n");
  auto mu = int_list(field(j, "mu"), "mu");
  if (!j.contains("parity")) return UnitaryDatum(d, n, std::move(mu));
  const auto& p = j.at("parity");
  if (p == "even") return UnitaryDatum(d, n, Parity::kEven, std::move(mu));
  if (p == "odd") return UnitaryDatum(d, n, Parity::kOdd, std::move(mu));
  fail("parity must be \"even\" or \"odd\"");
}

Json to_json(const GLClass& c) {
  return {{"slopes", to_json(c.slopes)}, {"newton", to_json(c.newton)}, {"kappa", c.kappa}};
}

GLClass gl_class_from_json(const Json& j, int d) {
  GLClass c = make_gl_class(slopes_from_json(field(j, "slopes")), d);
  if (j.contains("newton") && !(newton_from_json(j.at("newton")) == c.newton)) fail("newton does not match slopes");
  if (j.contains("kappa") && j.at("kappa") != c.kappa) fail("kappa does not match slopes");
  return c;
}

Json to_json(const UnitaryClass& c) {
  Json j = {{"slopes", to_json(c.slopes)}, {"newton", to_json(c.newton)}};
  j["kappa1"] = c.kappa1 ? Json(*c.kappa1) : Json(nullptr);
  j["similitude_valuation"] = c.similitude_valuation;
  return j;
}

UnitaryClass unitary_class_from_json(const Json& j, const UnitaryDatum& datum) {
  UnitaryClass c;
  c.slopes = slopes_from_json(field(j, "slopes"));
  c.newton = newton_point(c.slopes, 2 * datum.d());
  if (j.contains("newton") && !(newton_from_json(j.at("newton")) == c.newton)) fail("newton does not match slopes");
  const auto& k = field(j, "kappa1");
  if (!k.is_null()) c.kappa1 = int_from_json(k, "kappa1");
  if (j.contains("similitude_valuation")) c.similitude_valuation = int_from_json(j.at("similitude_valuation"), "similitude_valuation");
  return c;
}

Json to_json(const InnerFormDescription& jb) {
  Json factors = Json::array();
  for (const auto& f : jb.factors)
    factors.push_back({{"rank", f.rank}, {"base_degree", f.base_degree}, {"invariant", to_json(f.invariant)}});
  return {{"factors", factors}, {"anisotropic_mod_center", jb.anisotropic_mod_center()}};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) fail("matrix rows must be arrays");
    std::vector<Rational> row;
    for (const auto& x : r) row.push_back(rational_from_json(x));
    rows.push_back(std::move(row));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const Error&) {
    fail("ragged matrix");
  }
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) fail("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Polynomial(std::move(c));
}

Json to_json(const SturmCertificate& cert) {
  Json chain = Json::array();
  for (const auto& p : cert.chain) chain.push_back(to_json(p));
  return {{"chain", chain},
          {"sign_changes_at_neg_inf", cert.sign_changes_at_neg_inf},
          {"sign_changes_at_pos_inf", cert.sign_changes_at_pos_inf},
          {"distinct_real_roots", cert.distinct_real_roots},
          {"squarefree_degree", cert.squarefree_degree}};
}

LocalInvariantProfile profile_from_json(const Json& j) {
  LocalInvariantProfile p;
  p.n = int_from_json(field(j, "n"), "n");
  p.real_degree = int_from_json(field(j, "real_degree"), "real_degree");
  p.signatures = int_list(field(j, "signatures"), "signatures");
  if (j.contains("split_places")) p.split_places = int_list(j.at("split_places"), "split_places");
  if (j.contains("inert_places")) {
    const auto& inert = j.at("inert_places");
    if (!inert.is_array()) fail("inert_places must be an array of booleans");
    for (const auto& x : inert) {
      if (!x.is_boolean()) fail("inert_places entries must be booleans (quasi-split flags)");
      p.inert_places.push_back(x.get<bool>());
    }
  }
  return p;
}

Json poset_json(const Json& nodes, std::span<const CoverEdge> edges) {
  Json e = Json::array();
  for (const auto& edge : edges) e.push_back({edge.upper, edge.lower});
  return {{"nodes", nodes}, {"edges", e}};
}

std::string poset_dot(std::span<const NewtonPoint> nodes, std::span<const CoverEdge> edges) {
  std::ostringstream os;
  os << "digraph newton_strata {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << "  n" << i << " [label=\"(";
    for (std::size_t k = 0; k < nodes[i].size(); ++k) os << (k ? "," : "") << nodes[i][k];
    os << ")\"];\n";
  }
  for (const auto& e : edges) os << "  n" << e.upper << " -> n" << e.lower << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace isocrystal::json_io
