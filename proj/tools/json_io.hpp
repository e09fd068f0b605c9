#pragma once

#include <string>

#include <json.hpp>

#include "isocrystal/global_datum.hpp"
#include "isocrystal/kottwitz_gl.hpp"
#include "isocrystal/kottwitz_unitary.hpp"
#include "isocrystal/matrix.hpp"
#include "isocrystal/polygon.hpp"
#include "isocrystal/sturm.hpp"

// JSON wire formats. Rationals are always strings ("num/den" or "num");
// parsers also accept JSON integers wherever a rational is expected.
// Malformed payloads raise Error{kParseError}.
namespace isocrystal::json_io {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text);
Json read_file(const std::string& path);

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const NewtonPoint& nu);
NewtonPoint newton_from_json(const Json& j);

Json to_json(const SlopeDatum& s);
SlopeDatum slopes_from_json(const Json& j);

Json to_json(const GLDatum& datum);
GLDatum gl_datum_from_json(const Json& j);
Json to_json(const UnitaryDatum& datum);
UnitaryDatum unitary_datum_from_json(const Json& j);

Json to_json(const GLClass& c);
// d is needed when "newton"/"kappa" are absent; present fields must agree
// with the slopes.
GLClass gl_class_from_json(const Json& j, int d);
Json to_json(const UnitaryClass& c);
UnitaryClass unitary_class_from_json(const Json& j, const UnitaryDatum& datum);

Json to_json(const InnerFormDescription& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Constant term first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const SturmCertificate& cert);
LocalInvariantProfile profile_from_json(const Json& j);

Json poset_json(const Json& nodes, std::span<const CoverEdge> edges);
// Graphviz rendering; node labels are Newton points.
std::string poset_dot(std::span<const NewtonPoint> nodes, std::span<const CoverEdge> edges);

}  // namespace isocrystal::json_io
