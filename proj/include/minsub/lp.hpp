#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minsub/rational.hpp"

namespace minsub::lp {

class MalformedProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal };
enum class Bound { free, nonnegative };
enum class Status { optimal, unbounded, infeasible };

struct Row {
  Vector coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

struct LinearProgram {
  Sense sense = Sense::maximize;
  Vector objective;
  std::vector<Row> rows;
  std::vector<Bound> bounds;  // one entry per variable

  std::size_t num_vars() const { return objective.dim(); }

  /// Throws MalformedProgram unless every row and the bound list match the
  /// objective's dimension and there is at least one variable.
  void validate() const;
};

/// Solver result. Certificates are stated for the maximize form of the
/// program (objective negated when sense is minimize):
///  - optimal: `point` is feasible, `dual` has y_i >= 0 on <= rows,
///    A^T y >= c on nonnegative variables, A^T y = c on free ones, and
///    b^T y equals the maximize-form value.
///  - unbounded: `point` is feasible and `ray` is a recession direction of
///    the feasible set with c^T ray > 0.
///  - infeasible: `dual` is a Farkas vector: y_i >= 0 on <= rows,
///    A^T y >= 0 on nonnegative variables, = 0 on free ones, b^T y < 0.
struct Outcome {
  Status status = Status::infeasible;
  std::optional<Vector> point;
  std::optional<Rational> value;  // in the program's own sense
  std::optional<Vector> ray;
  std::optional<Vector> dual;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
Outcome solve(const LinearProgram& program);

/// Re-checks the certificate carried by `outcome` with exact arithmetic.
bool verify_certificate(const LinearProgram& program, const Outcome& outcome);

std::string to_string(Status status);

}  // namespace minsub::lp
