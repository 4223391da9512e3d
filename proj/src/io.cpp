#include "minsub/io.hpp"

#include <sstream>

namespace minsub::io {

SchemaError::SchemaError(const std::string& field, const std::string& what)
    : std::invalid_argument("field '" + field + "': " + what), field_(field) {}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

Json to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const HPolyhedron& h) {
  Json out;
  out["dim"] = h.dim();
  out["rows"] = to_json(h.rows());
  Json rhs = Json::array();
  for (std::size_t i = 0; i < h.size(); ++i) rhs.push_back("1");
  out["rhs"] = std::move(rhs);
  return out;
}

Json to_json(const VPolytope& v) {
  Json out;
  out["dim"] = v.dim;
  out["points"] = to_json(v.points);
  return out;
}

Json to_json(const CornerInstance& inst) {
  Json out;
  out["dim"] = inst.dim;
  out["f"] = to_json(inst.f);
  out["rays"] = to_json(inst.rays);
  Json p;
  p["rows"] = to_json(inst.p_rows);
  Json rhs = Json::array();
  for (const auto& b : inst.p_rhs) rhs.push_back(b.str());
  p["rhs"] = std::move(rhs);
  out["P"] = std::move(p);
  return out;
}

Json to_json(const SFreeBody& body) {
  Json out;
  out["rows"] = to_json(body.rows);
  Json rhs = Json::array();
  for (const auto& b : body.rhs) rhs.push_back(b.str());
  out["rhs"] = std::move(rhs);
  return out;
}

Json to_json(const Cut& cut) {
  Json out;
  Json alpha = Json::array();
  for (const auto& a : cut.alpha) alpha.push_back(a.str());
  out["alpha"] = std::move(alpha);
  out["provenance"] = cut.provenance;
  return out;
}

Json to_json(const SandwichReport& report) {
  Json out;
  out["passed"] = report.passed();
  out["samples_checked"] = report.samples_checked;
  Json vs = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["x"] = to_json(v.x);
    item["rho"] = v.rho.str();
    item["sigma"] = v.sigma.str();
    item["gamma"] = v.gamma.str();
    vs.push_back(std::move(item));
  }
  out["violations"] = std::move(vs);
  return out;
}

Json to_json(const SFreeVerdict& verdict) {
  Json out;
  out["free_on_region"] = verdict.free_on_region;
  out["radius"] = verdict.radius;
  if (verdict.witness) out["z"] = to_json(*verdict.witness);
  return out;
}

Json to_json(const ValidityReport& report) {
  Json out;
  out["valid_on_region"] = report.valid_on_region;
  out["radius"] = report.radius;
  out["lattice_points_checked"] = report.lattice_points_checked;
  Json optima = Json::array();
  for (const auto& o : report.optima) {
    Json item;
    item["x"] = to_json(o.x);
    item["value"] = o.value.str();
    optima.push_back(std::move(item));
  }
  out["optima"] = std::move(optima);
  Json vs = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["x"] = to_json(v.x);
    item["s"] = to_json(v.s);
    if (v.ray) item["ray"] = to_json(*v.ray);
    vs.push_back(std::move(item));
  }
  out["violations"] = std::move(vs);
  return out;
}

Json to_json(const MaximalityCertificate& cert) {
  Json out;
  out["certified"] = cert.certified;
  out["heuristic"] = cert.heuristic;
  out["radius"] = cert.radius;
  Json pts = Json::array();
  for (const auto& p : cert.facet_points) pts.push_back(p ? to_json(*p) : Json(nullptr));
  out["facet_points"] = std::move(pts);
  out["uncertified_facets"] = cert.uncertified_facets;
  return out;
}

Json to_json(const lp::LinearProgram& program) {
  Json out;
  out["sense"] = program.sense == lp::Sense::maximize ? "maximize" : "minimize";
  out["objective"] = to_json(program.objective);
  Json rows = Json::array();
  for (const auto& r : program.rows) {
    Json item;
    item["coeffs"] = to_json(r.coeffs);
    item["relation"] = r.relation == lp::Relation::equal ? "=" : "<=";
    item["rhs"] = r.rhs.str();
    rows.push_back(std::move(item));
  }
  out["rows"] = std::move(rows);
  Json bounds = Json::array();
  for (auto b : program.bounds) bounds.push_back(b == lp::Bound::free ? "free" : "nonnegative");
  out["bounds"] = std::move(bounds);
  return out;
}

Json to_json(const lp::Outcome& outcome) {
  Json out;
  out["status"] = lp::to_string(outcome.status);
  if (outcome.point) out["point"] = to_json(*outcome.point);
  if (outcome.value) out["value"] = outcome.value->str();
  if (outcome.ray) out["ray"] = to_json(*outcome.ray);
  if (outcome.dual) out["dual"] = to_json(*outcome.dual);
  return out;
}

const Json& require(const Json& j, const std::string& key, const std::string& prefix) {
  const std::string field = prefix.empty() ? key : prefix + "." + key;
  if (!j.is_object()) throw SchemaError(prefix.empty() ? "<root>" : prefix, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(field, "missing");
  return *it;
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(field, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const RationalError& e) {
    throw SchemaError(field, e.what());
  }
}

Vector vector_from_json(const Json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array()) throw SchemaError(field, "expected an array");
  if (dim != 0 && j.size() != dim)
    throw SchemaError(field, "expected " + std::to_string(dim) + " entries, got " +
                                 std::to_string(j.size()));
  if (j.empty()) throw SchemaError(field, "empty vector");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = rational_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

std::vector<Vector> vectors_from_json(const Json& j, const std::string& field, std::size_t dim) {
  if (!j.is_array()) throw SchemaError(field, "expected an array");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]", dim));
  return out;
}

namespace {

std::size_t dim_from_json(const Json& j, const std::string& prefix = "") {
  const Json& d = require(j, "dim", prefix);
  const std::string field = prefix.empty() ? "dim" : prefix + ".dim";
  if (!d.is_number_integer() || d.get<long>() < 1) throw SchemaError(field, "expected a positive integer");
  return d.get<std::size_t>();
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& field, std::size_t count) {
  if (!j.is_array()) throw SchemaError(field, "expected an array");
  if (j.size() != count)
    throw SchemaError(field, "expected " + std::to_string(count) + " entries, got " +
                                 std::to_string(j.size()));
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

HPolyhedron hpolyhedron_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  auto rows = vectors_from_json(require(j, "rows"), "rows", dim);
  if (rows.empty()) throw SchemaError("rows", "at least one row required");
  auto rhs = rationals_from_json(require(j, "rhs"), "rhs", rows.size());
  return normalize(rows, rhs);
}

VPolytope vpolytope_from_json(const Json& j) {
  VPolytope v;
  v.dim = dim_from_json(j);
  v.points = vectors_from_json(require(j, "points"), "points", v.dim);
  if (v.points.empty()) throw SchemaError("points", "at least one point required");
  return v;
}

CornerInstance instance_from_json(const Json& j) {
  CornerInstance inst;
  inst.dim = dim_from_json(j);
  inst.f = vector_from_json(require(j, "f"), "f", inst.dim);
  inst.rays = vectors_from_json(require(j, "rays"), "rays", inst.dim);
  if (inst.rays.empty()) throw SchemaError("rays", "at least one ray required");
  if (j.contains("P")) {
    const Json& p = j["P"];
    inst.p_rows = vectors_from_json(require(p, "rows", "P"), "P.rows", inst.dim);
    inst.p_rhs = rationals_from_json(require(p, "rhs", "P"), "P.rhs", inst.p_rows.size());
  }
  if (inst.f.is_integral()) throw SchemaError("f", "must have a fractional coordinate");
  return inst;
}

SFreeBody body_from_json(const Json& j, const CornerInstance& inst) {
  auto rows = vectors_from_json(require(j, "rows", "body"), "body.rows", inst.dim);
  if (rows.empty()) throw SchemaError("body.rows", "at least one row required");
  auto rhs = rationals_from_json(require(j, "rhs", "body"), "body.rhs", rows.size());
  return SFreeBody::around(std::move(rows), std::move(rhs), inst.f);
}

Cut cut_from_json(const Json& j, std::size_t num_rays) {
  Cut cut;
  cut.alpha = rationals_from_json(require(j, "alpha", "cut"), "cut.alpha", num_rays);
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw SchemaError("cut.provenance", "expected a string");
    cut.provenance = j["provenance"].get<std::string>();
  }
  return cut;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!is_scalar(e) && !is_flat_array(e)) return false;
  return true;
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_value(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value) || is_flat_array(value)) {
      os << pad << key << ": " << inline_value(value) << '\n';
    } else if (value.is_object()) {
      os << pad << key << ":\n";
      render(value, indent + 2, os);
    } else {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << pad << "  -\n";
          render(item, indent + 4, os);
        } else {
          os << pad << "  - " << inline_value(item) << '\n';
        }
      }
    }
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream os;
  if (j.is_object()) render(j, 0, os);
  else os << inline_value(j) << '\n';
  return os.str();
}

}  // namespace minsub::io
