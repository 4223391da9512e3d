#include "minsub/polyhedra.hpp"

#include <algorithm>

#include "minsub/lp.hpp"

namespace minsub {

void VPolytope::validate() const {
  if (points.empty()) throw GeometryError("V-polytope needs at least one point");
  for (const auto& p : points)
    if (p.dim() != dim)
      throw GeometryError("V-polytope point of dimension " + std::to_string(p.dim()) +
                          ", expected " + std::to_string(dim));
}

HPolyhedron normalize(const std::vector<Vector>& rows, const std::vector<Rational>& rhs) {
  if (rows.empty()) throw GeometryError("no rows given");
  if (rows.size() != rhs.size())
    throw GeometryError("rows/rhs length mismatch: " + std::to_string(rows.size()) + " vs " +
                        std::to_string(rhs.size()));
  const std::size_t dim = rows.front().dim();
  if (dim == 0) throw GeometryError("dimension must be positive");
  std::vector<Vector> scaled;
  scaled.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != dim)
      throw GeometryError("row " + std::to_string(i) + " has dimension " +
                          std::to_string(rows[i].dim()) + ", expected " + std::to_string(dim));
    if (rhs[i].sign() <= 0)
      throw GeometryError("origin not interior: row " + std::to_string(i) +
                          " has right-hand side " + rhs[i].str());
    scaled.push_back(rows[i] * (Rational(1) / rhs[i]));
  }
  return remove_redundancy(dim, scaled);
}

namespace {

lp::LinearProgram maximize_over(std::size_t dim, const Vector& objective,
                                const std::vector<const Vector*>& constraints) {
  lp::LinearProgram p;
  p.sense = lp::Sense::maximize;
  p.objective = objective;
  p.bounds.assign(dim, lp::Bound::free);
  for (const Vector* row : constraints) p.rows.push_back({*row, lp::Relation::less_equal, 1});
  return p;
}

}  // namespace

HPolyhedron remove_redundancy(std::size_t dim, const std::vector<Vector>& rows) {
  std::vector<Vector> cleaned;
  for (const auto& r : rows) {
    if (r.dim() != dim)
      throw GeometryError("row of dimension " + std::to_string(r.dim()) + ", expected " +
                          std::to_string(dim));
    if (r.is_zero()) continue;
    if (std::find(cleaned.begin(), cleaned.end(), r) == cleaned.end()) cleaned.push_back(r);
  }
  if (cleaned.empty()) throw GeometryError("improper set: every row is trivial, K is the whole space");

  std::vector<bool> kept(cleaned.size(), true);
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    std::vector<const Vector*> others;
    for (std::size_t j = 0; j < cleaned.size(); ++j)
      if (j != i && kept[j]) others.push_back(&cleaned[j]);
    const auto out = lp::solve(maximize_over(dim, cleaned[i], others));
    const bool redundant = out.status == lp::Status::optimal && *out.value <= 1;
    if (redundant) kept[i] = false;
  }
  std::vector<Vector> result;
  for (std::size_t i = 0; i < cleaned.size(); ++i)
    if (kept[i]) result.push_back(std::move(cleaned[i]));
  return HPolyhedron(dim, std::move(result));
}

VPolytope polar(const HPolyhedron& h) {
  VPolytope v;
  v.dim = h.dim();
  v.points.reserve(h.size() + 1);
  v.points.emplace_back(h.dim());
  for (const auto& r : h.rows()) v.points.push_back(r);
  return v;
}

std::vector<Vector> khat_points(const HPolyhedron& h) { return h.rows(); }

MembershipVerdict membership(const HPolyhedron& h, const Vector& x) {
  require_same_dim(h.row(0), x);
  MembershipVerdict verdict;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Rational v = dot(h.row(i), x);
    if (v > 1) {
      verdict.position = Position::outside;
      verdict.tight_rows.clear();
      return verdict;
    }
    if (v == 1) verdict.tight_rows.push_back(i);
  }
  verdict.position = verdict.tight_rows.empty() ? Position::interior : Position::boundary;
  return verdict;
}

std::vector<Vector> recession_cone(const HPolyhedron& h) { return h.rows(); }

bool in_recession(const HPolyhedron& h, const Vector& x) {
  for (const auto& r : h.rows())
    if (dot(r, x).sign() > 0) return false;
  return true;
}

bool is_bounded(const HPolyhedron& h) {
  std::vector<const Vector*> all;
  for (const auto& r : h.rows()) all.push_back(&r);
  for (std::size_t k = 0; k < h.dim(); ++k) {
    for (int sign : {1, -1}) {
      const Vector e = Vector::unit(h.dim(), k) * Rational(sign);
      if (lp::solve(maximize_over(h.dim(), e, all)).status != lp::Status::optimal) return false;
    }
  }
  return true;
}

HullMembership hull_membership(const Vector& p, const VPolytope& v) {
  v.validate();
  if (p.dim() != v.dim) throw DimensionMismatch("point and polytope dimensions differ");
  const std::size_t n = v.dim;
  const std::size_t k = v.points.size();

  // Find lambda >= 0 with sum lambda = 1 and sum lambda_i q_i = p.
  lp::LinearProgram feas;
  feas.objective = Vector(k);
  feas.bounds.assign(k, lp::Bound::nonnegative);
  for (std::size_t c = 0; c < n; ++c) {
    Vector coeffs(k);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = v.points[i][c];
    feas.rows.push_back({std::move(coeffs), lp::Relation::equal, p[c]});
  }
  Vector ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
  feas.rows.push_back({ones, lp::Relation::equal, 1});
  const auto found = lp::solve(feas);

  HullMembership result;
  if (found.status == lp::Status::optimal) {
    result.inside = true;
    result.multipliers = *found.point;
    return result;
  }

  // Separator: maximize <c, p> - gamma  s.t. <c, q_i> - gamma <= 0,
  // -1 <= c <= 1. Variables (c_1..c_n, gamma), all free.
  lp::LinearProgram sep;
  sep.objective = Vector(n + 1);
  for (std::size_t c = 0; c < n; ++c) sep.objective[c] = p[c];
  sep.objective[n] = -1;
  sep.bounds.assign(n + 1, lp::Bound::free);
  for (const auto& q : v.points) {
    Vector coeffs(n + 1);
    for (std::size_t c = 0; c < n; ++c) coeffs[c] = q[c];
    coeffs[n] = -1;
    sep.rows.push_back({std::move(coeffs), lp::Relation::less_equal, 0});
  }
  for (std::size_t c = 0; c < n; ++c) {
    sep.rows.push_back({Vector::unit(n + 1, c), lp::Relation::less_equal, 1});
    sep.rows.push_back({-Vector::unit(n + 1, c), lp::Relation::less_equal, 1});
  }
  const auto best = lp::solve(sep);
  if (best.status != lp::Status::optimal || best.value->sign() <= 0)
    throw InternalConsistencyError("hull membership: infeasible point has no separator");
  result.separator = Vector(n);
  for (std::size_t c = 0; c < n; ++c) result.separator[c] = (*best.point)[c];
  result.offset = (*best.point)[n];
  return result;
}

ExposedWitness exposed_witness(const HPolyhedron& h, std::size_t i) {
  if (i >= h.size()) throw std::out_of_range("row index " + std::to_string(i) + " out of range");
  const std::size_t n = h.dim();
  // Variables (x_1..x_n, eps): maximize eps subject to <a_i, x> = 1,
  // <a_j, x> + eps <= 1 for j != i, eps <= 1.
  lp::LinearProgram p;
  p.objective = Vector::unit(n + 1, n);
  p.bounds.assign(n + 1, lp::Bound::free);
  auto lift = [n](const Vector& a, const Rational& eps_coeff) {
    Vector out(n + 1);
    for (std::size_t c = 0; c < n; ++c) out[c] = a[c];
    out[n] = eps_coeff;
    return out;
  };
  p.rows.push_back({lift(h.row(i), 0), lp::Relation::equal, 1});
  for (std::size_t j = 0; j < h.size(); ++j)
    if (j != i) p.rows.push_back({lift(h.row(j), 1), lp::Relation::less_equal, 1});
  p.rows.push_back({Vector::unit(n + 1, n), lp::Relation::less_equal, 1});

  const auto out = lp::solve(p);
  if (out.status != lp::Status::optimal || out.value->sign() <= 0)
    throw InternalConsistencyError("row " + std::to_string(i) + " not exposed");
  ExposedWitness w;
  w.point = Vector(n);
  for (std::size_t c = 0; c < n; ++c) w.point[c] = (*out.point)[c];
  w.margin = *out.value;
  return w;
}

std::string to_string(Position p) {
  switch (p) {
    case Position::interior:
      return "interior";
    case Position::boundary:
      return "boundary";
    case Position::outside:
      return "outside";
  }
  return "unknown";
}

}  // namespace minsub
