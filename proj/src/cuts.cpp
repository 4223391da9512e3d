#include "minsub/cuts.hpp"

#include "minsub/lp.hpp"

namespace minsub {

void CornerInstance::validate() const {
  if (dim == 0) throw GeometryError("instance dimension must be positive");
  if (f.dim() != dim) throw GeometryError("f has dimension " + std::to_string(f.dim()));
  if (f.is_integral()) throw GeometryError("f must have a fractional coordinate");
  if (rays.empty()) throw GeometryError("instance needs at least one ray");
  for (std::size_t j = 0; j < rays.size(); ++j)
    if (rays[j].dim() != dim) throw GeometryError("ray " + std::to_string(j) + " has wrong dimension");
  if (p_rows.size() != p_rhs.size()) throw GeometryError("P rows/rhs length mismatch");
  for (std::size_t i = 0; i < p_rows.size(); ++i)
    if (p_rows[i].dim() != dim) throw GeometryError("P row " + std::to_string(i) + " has wrong dimension");
}

bool CornerInstance::in_P(const Vector& x) const {
  for (std::size_t i = 0; i < p_rows.size(); ++i)
    if (dot(p_rows[i], x) > p_rhs[i]) return false;
  return true;
}

NotSFreeError::NotSFreeError(Vector witness)
    : std::runtime_error("body is not S-free: lattice point " + to_string(witness) +
                         " lies in its interior"),
      witness_(std::move(witness)) {}

HPolyhedron translate_to_K(const std::vector<Vector>& rows, const std::vector<Rational>& rhs,
                           const Vector& f) {
  if (rows.size() != rhs.size()) throw GeometryError("body rows/rhs length mismatch");
  std::vector<Rational> shifted;
  shifted.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational slack = rhs[i] - dot(rows[i], f);
    if (slack.sign() <= 0)
      throw GeometryError("f not interior: row " + std::to_string(i) + " has slack " + slack.str());
    shifted.push_back(std::move(slack));
  }
  return normalize(rows, shifted);
}

SFreeBody SFreeBody::around(std::vector<Vector> rows, std::vector<Rational> rhs, const Vector& f) {
  HPolyhedron k = translate_to_K(rows, rhs, f);
  return SFreeBody{std::move(rows), std::move(rhs), std::move(k)};
}

Rational psi_B(const HPolyhedron& k, const Vector& r) { return rho_eval(k, r); }

std::vector<Vector> lattice_box(const Vector& f, long radius) {
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  const std::size_t n = f.dim();
  std::vector<mpz_class> center(n);
  for (std::size_t c = 0; c < n; ++c) center[c] = (f[c] + make_rational(1, 2)).floor();

  std::vector<Vector> out;
  std::vector<long> offset(n, -radius);
  for (;;) {
    Vector z(n);
    for (std::size_t c = 0; c < n; ++c) z[c] = Rational(mpz_class(center[c] + offset[c]));
    out.push_back(std::move(z));
    std::size_t c = n;
    while (c > 0 && offset[c - 1] == radius) offset[--c] = -radius;
    if (c == 0) break;
    ++offset[c - 1];
  }
  return out;
}

namespace {

// Strictly inside B, i.e. <a_i, z - f> < 1 on every row of K.
bool strictly_inside(const SFreeBody& body, const Vector& z, const Vector& f) {
  const Vector y = z - f;
  for (const auto& a : body.k.rows())
    if (dot(a, y) >= 1) return false;
  return true;
}

}  // namespace

SFreeVerdict is_S_free(const SFreeBody& body, const CornerInstance& inst, long radius) {
  inst.validate();
  SFreeVerdict verdict;
  verdict.radius = radius;
  for (auto& z : lattice_box(inst.f, radius)) {
    if (inst.in_P(z) && strictly_inside(body, z, inst.f)) {
      verdict.free_on_region = false;
      verdict.witness = std::move(z);
      break;
    }
  }
  return verdict;
}

Cut generate_cut(const CornerInstance& inst, const SFreeBody& body, long radius) {
  const auto verdict = is_S_free(body, inst, radius);
  if (!verdict.free_on_region) throw NotSFreeError(*verdict.witness);
  Cut cut;
  cut.alpha.reserve(inst.rays.size());
  for (const auto& r : inst.rays) cut.alpha.push_back(psi_B(body.k, r));
  cut.provenance = "psi_B of a " + std::to_string(body.k.size()) +
                   "-facet body, S-free on radius " + std::to_string(radius);
  return cut;
}

ValidityReport check_cut_validity(const CornerInstance& inst, const Cut& cut, long radius) {
  inst.validate();
  if (cut.alpha.size() != inst.rays.size())
    throw GeometryError("cut has " + std::to_string(cut.alpha.size()) + " coefficients for " +
                        std::to_string(inst.rays.size()) + " rays");
  const std::size_t m = inst.rays.size();
  ValidityReport report;
  report.radius = radius;

  lp::LinearProgram p;
  p.sense = lp::Sense::minimize;
  p.objective = Vector(cut.alpha);
  p.bounds.assign(m, lp::Bound::nonnegative);
  for (std::size_t c = 0; c < inst.dim; ++c) {
    Vector coeffs(m);
    for (std::size_t j = 0; j < m; ++j) coeffs[j] = inst.rays[j][c];
    p.rows.push_back({std::move(coeffs), lp::Relation::equal, 0});
  }

  for (auto& x : lattice_box(inst.f, radius)) {
    if (!inst.in_P(x)) continue;
    ++report.lattice_points_checked;
    const Vector target = x - inst.f;
    for (std::size_t c = 0; c < inst.dim; ++c) p.rows[c].rhs = target[c];
    auto out = lp::solve(p);
    if (out.status == lp::Status::infeasible) continue;
    if (out.status == lp::Status::unbounded) {
      report.violations.push_back({x, *out.point, *out.ray});
      continue;
    }
    if (*out.value < 1) report.violations.push_back({x, *out.point, std::nullopt});
    report.optima.push_back({std::move(x), std::move(*out.value)});
  }
  report.valid_on_region = report.violations.empty();
  return report;
}

MaximalityCertificate maximality_certificate(const SFreeBody& body, const CornerInstance& inst,
                                             long radius) {
  inst.validate();
  MaximalityCertificate cert;
  cert.radius = radius;
  cert.heuristic = !inst.p_rows.empty() || !is_bounded(body.k);
  const std::size_t k = body.k.size();
  cert.facet_points.assign(k, std::nullopt);
  for (const auto& z : lattice_box(inst.f, radius)) {
    if (!inst.in_P(z)) continue;
    const Vector y = z - inst.f;
    std::optional<std::size_t> tight;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const Rational v = dot(body.k.row(i), y);
      if (v > 1) ok = false;
      else if (v == 1) {
        if (tight) ok = false;  // on two facets: not relative interior
        else tight = i;
      }
    }
    if (ok && tight && !cert.facet_points[*tight]) cert.facet_points[*tight] = z;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!cert.facet_points[i]) cert.uncertified_facets.push_back(i);
  cert.certified = cert.uncertified_facets.empty();
  return cert;
}

SandwichReport minimal_function_compare(const SFreeBody& body, const SupportFunction& c,
                                        const std::vector<Vector>& samples) {
  if (!check_unit_ball(c, body.k))
    throw PreconditionError("sigma_C does not have B - f as its unit ball");
  SandwichReport report;
  for (const auto& r : samples) {
    Rational psi = psi_B(body.k, r);
    Rational sigma = support_eval(c, r);
    ++report.samples_checked;
    if (psi > sigma) report.violations.push_back({r, std::move(psi), std::move(sigma), gauge_eval(body.k, r)});
  }
  return report;
}

}  // namespace minsub
