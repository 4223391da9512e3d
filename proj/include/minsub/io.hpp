#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "minsub/cuts.hpp"
#include "minsub/lp.hpp"
#include "minsub/polyhedra.hpp"
#include "minsub/rational.hpp"
#include "minsub/sublinear.hpp"

namespace minsub::io {

using Json = nlohmann::ordered_json;

/// Input JSON that does not match the expected schema. The message names
/// the offending field by its path, e.g. "rows[2][0]".
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& field, const std::string& what);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Rationals are written as "p/q" strings ("p" when q = 1). On input JSON
// integers are accepted as well.
Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const std::vector<Vector>& vs);
Json to_json(const HPolyhedron& h);
Json to_json(const VPolytope& v);
Json to_json(const CornerInstance& inst);
Json to_json(const SFreeBody& body);
Json to_json(const Cut& cut);
Json to_json(const SandwichReport& report);
Json to_json(const SFreeVerdict& verdict);
Json to_json(const ValidityReport& report);
Json to_json(const MaximalityCertificate& cert);
Json to_json(const lp::LinearProgram& program);
Json to_json(const lp::Outcome& outcome);

Rational rational_from_json(const Json& j, const std::string& field);
Vector vector_from_json(const Json& j, const std::string& field, std::size_t dim = 0);
std::vector<Vector> vectors_from_json(const Json& j, const std::string& field, std::size_t dim = 0);

/// {"dim": n, "rows": [...], "rhs": [...]} -> normalized K.
HPolyhedron hpolyhedron_from_json(const Json& j);
VPolytope vpolytope_from_json(const Json& j);
/// {"dim", "f", "rays", "P": {"rows", "rhs"}}; "P" may be omitted (P = R^n).
CornerInstance instance_from_json(const Json& j);
/// {"rows", "rhs"} translated around inst.f.
SFreeBody body_from_json(const Json& j, const CornerInstance& inst);
Cut cut_from_json(const Json& j, std::size_t num_rays);

/// Returns the member or throws SchemaError naming it.
const Json& require(const Json& j, const std::string& key, const std::string& prefix = "");

/// Indented "key: value" rendering of a report, same content as the JSON.
std::string to_text(const Json& j);

}  // namespace minsub::io
