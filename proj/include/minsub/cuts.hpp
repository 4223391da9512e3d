#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minsub/polyhedra.hpp"
#include "minsub/rational.hpp"
#include "minsub/sublinear.hpp"

namespace minsub {

inline constexpr long kDefaultRadius = 5;

/// x = f + sum_j r^j s_j,  x ∈ S = P ∩ Z^n,  s >= 0.
/// P = {x : P_rows x <= P_rhs}; an empty row list means P = R^n.
struct CornerInstance {
  std::size_t dim = 0;
  Vector f;
  std::vector<Vector> rays;
  std::vector<Vector> p_rows;
  std::vector<Rational> p_rhs;

  /// Throws GeometryError on dimension mismatches, an empty ray list, or
  /// an integral f.
  void validate() const;
  bool in_P(const Vector& x) const;
};

/// Polyhedral body B = {x : <a, x> <= b} around f, together with its
/// canonical translate K = B - f.
struct SFreeBody {
  std::vector<Vector> rows;
  std::vector<Rational> rhs;
  HPolyhedron k;

  /// Throws GeometryError if f is not strictly inside B.
  static SFreeBody around(std::vector<Vector> rows, std::vector<Rational> rhs, const Vector& f);
};

struct Cut {
  std::vector<Rational> alpha;  // sum_j alpha_j s_j >= 1
  std::string provenance;
};

/// Raised by generate_cut when the body has a point of S in its interior.
class NotSFreeError : public std::runtime_error {
 public:
  explicit NotSFreeError(Vector witness);
  const Vector& witness() const { return witness_; }

 private:
  Vector witness_;
};

/// K = {y : <a, y> <= b - <a, f>} normalized. Throws GeometryError
/// ("f not interior") unless <a, f> < b for every row.
HPolyhedron translate_to_K(const std::vector<Vector>& rows, const std::vector<Rational>& rhs,
                           const Vector& f);

/// psi_B(r) = max_i <a_i, r> over the rows of K = B - f.
Rational psi_B(const HPolyhedron& k, const Vector& r);

/// Integer points z with ||z - round(f)||_inf <= radius in lexicographic
/// order; round() sends halves up.
std::vector<Vector> lattice_box(const Vector& f, long radius);

struct SFreeVerdict {
  bool free_on_region = true;
  long radius = 0;
  std::optional<Vector> witness;  // lexicographically smallest z ∈ S ∩ int(B)
};

SFreeVerdict is_S_free(const SFreeBody& body, const CornerInstance& inst, long radius);

/// alpha_j = psi_B(r^j). Throws NotSFreeError with the interior lattice
/// point when the body is not S-free on the region.
Cut generate_cut(const CornerInstance& inst, const SFreeBody& body, long radius = kDefaultRadius);

struct LatticeOptimum {
  Vector x;
  Rational value;  // min sum alpha_j s_j with sum r^j s_j = x - f
};

struct CutViolation {
  Vector x;
  Vector s;
  std::optional<Vector> ray;  // present when the LP is unbounded below
};

struct ValidityReport {
  bool valid_on_region = true;
  long radius = 0;
  std::size_t lattice_points_checked = 0;
  std::vector<LatticeOptimum> optima;       // reachable points with a finite optimum
  std::vector<CutViolation> violations;     // lexicographic order of x
};

ValidityReport check_cut_validity(const CornerInstance& inst, const Cut& cut, long radius);

struct MaximalityCertificate {
  bool certified = false;
  /// True when the sufficient condition is outside its proven scope
  /// (B unbounded or P a proper subset of R^n).
  bool heuristic = false;
  long radius = 0;
  std::vector<std::optional<Vector>> facet_points;  // per row of body.k
  std::vector<std::size_t> uncertified_facets;
};

/// Certified iff every facet of B has a point of S within the region that
/// is tight on that facet alone.
MaximalityCertificate maximality_certificate(const SFreeBody& body, const CornerInstance& inst,
                                             long radius);

/// psi_B <= sigma_C at each sample; rho/sigma/gamma fields of violations
/// carry psi_B, sigma_C and the gauge of K. Throws PreconditionError when
/// check_unit_ball(c, body.k) fails.
SandwichReport minimal_function_compare(const SFreeBody& body, const SupportFunction& c,
                                        const std::vector<Vector>& samples);

}  // namespace minsub
