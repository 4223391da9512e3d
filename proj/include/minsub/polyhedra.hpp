#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minsub/rational.hpp"

namespace minsub {

/// Input that cannot describe a closed convex set with the origin in its
/// interior (nonpositive right-hand side, no effective rows, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation whose success is guaranteed by the theory failed.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// K = {x : <a_i, x> <= 1 for every row a_i}. Always canonical: rows are
/// nonzero, pairwise distinct, and irredundant, and there is at least one.
/// Only normalize() and remove_redundancy() construct these.
class HPolyhedron {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const Vector& row(std::size_t i) const { return rows_.at(i); }

  friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;

 private:
  HPolyhedron(std::size_t dim, std::vector<Vector> rows) : dim_(dim), rows_(std::move(rows)) {}
  friend HPolyhedron remove_redundancy(std::size_t dim, const std::vector<Vector>& rows);

  std::size_t dim_;
  std::vector<Vector> rows_;
};

/// conv(points). The point list need not be minimal.
struct VPolytope {
  std::size_t dim = 0;
  std::vector<Vector> points;

  /// Throws GeometryError if empty or dimensions disagree.
  void validate() const;
};

/// Rescales each (a, b) to a/b, drops zero rows, merges duplicates and
/// removes redundant rows. Throws GeometryError if some b <= 0 (origin not
/// interior) or nothing is left (K is the whole space).
HPolyhedron normalize(const std::vector<Vector>& rows, const std::vector<Rational>& rhs);

/// Keeps row i iff max <a_i, x> subject to the other kept rows is unbounded
/// or exceeds 1. Rows must already have right-hand side 1. Input order of
/// the surviving rows is preserved.
HPolyhedron remove_redundancy(std::size_t dim, const std::vector<Vector>& rows);

/// K* = conv({0} ∪ rows); the origin is listed first.
VPolytope polar(const HPolyhedron& h);

/// Exposed points of K* lying in K-hat, i.e. the rows of a canonical h.
std::vector<Vector> khat_points(const HPolyhedron& h);

enum class Position { interior, boundary, outside };

struct MembershipVerdict {
  Position position = Position::interior;
  std::vector<std::size_t> tight_rows;  // filled when on the boundary
};

MembershipVerdict membership(const HPolyhedron& h, const Vector& x);

/// Rows of the cone {x : <a_i, x> <= 0}.
std::vector<Vector> recession_cone(const HPolyhedron& h);
bool in_recession(const HPolyhedron& h, const Vector& x);

/// True iff K is bounded (every coordinate is bounded above and below).
bool is_bounded(const HPolyhedron& h);

struct HullMembership {
  bool inside = false;
  Vector multipliers;  // inside: nonnegative, sums to 1, one per stored point
  Vector separator;    // outside: <separator, p> > offset >= <separator, q>
  Rational offset;
};

/// Decides p ∈ conv(v.points) by LP and returns a certificate either way.
/// Separators are normalized to the unit infinity-norm box and maximize
/// the violation <c, p> - offset.
HullMembership hull_membership(const Vector& p, const VPolytope& v);

struct ExposedWitness {
  Vector point;   // <a_i, point> = 1 and <a_j, point> <= 1 - margin for j != i
  Rational margin;
};

/// Finds a point of K tight on row i only, by maximizing the slack margin
/// on the other rows (capped at 1). Throws InternalConsistencyError if the
/// best margin is not positive.
ExposedWitness exposed_witness(const HPolyhedron& h, std::size_t i);

std::string to_string(Position p);

}  // namespace minsub
