#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minsub/polyhedra.hpp"
#include "minsub/rational.hpp"

namespace minsub {

/// A check was invoked on input that violates its stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polyhedral sublinear function sigma_C(x) = max over generator points v
/// of <v, x>. Evaluation depends only on conv(generator).
struct SupportFunction {
  VPolytope generator;
};

struct SandwichViolation {
  Vector x;
  Rational rho;
  Rational sigma;
  Rational gamma;
};

struct SandwichReport {
  std::size_t samples_checked = 0;
  std::vector<SandwichViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// gamma_K(x) = max(0, max_i <a_i, x>), the support function of K*.
Rational gauge_eval(const HPolyhedron& h, const Vector& x);

/// rho_K(x) = max_i <a_i, x>, the support function of K-hat. May be negative.
Rational rho_eval(const HPolyhedron& h, const Vector& x);

Rational support_eval(const SupportFunction& c, const Vector& x);

/// sup over K* of <x, y>, computed by LP over convex multipliers of
/// {0} ∪ rows. Independent of the closed forms above.
Rational polar_support_lp(const HPolyhedron& h, const Vector& x);

/// True iff {x : sigma_C(x) <= 1} = K, checked as conv(K-hat) ⊆ conv(C) ⊆ K*:
/// every row of h lies in conv(C) and every generator v has
/// sup_{x in K} <x, v> <= 1.
bool check_unit_ball(const SupportFunction& c, const HPolyhedron& h);

/// Generator = rows(h) plus `count` random exact convex combinations of
/// {0} ∪ rows(h). Always passes check_unit_ball.
SupportFunction random_valid_C(const HPolyhedron& h, std::uint64_t seed, std::size_t count);

/// Checks rho_K <= sigma_C <= gamma_K at each sample. Throws
/// PreconditionError when check_unit_ball(c, h) fails.
SandwichReport sandwich_check(const HPolyhedron& h, const SupportFunction& c,
                              const std::vector<Vector>& samples);

/// x ∈ K  <=>  rho_K(x) <= 1 at each sample, and rho_K(x / gamma_K(x)) = 1
/// whenever gamma_K(x) > 0.
bool reconstruct_check(const HPolyhedron& h, const std::vector<Vector>& samples);

/// For x outside rec(K): rho_K(x) = gamma_K(x) = polar_support_lp(h, x).
/// Throws PreconditionError when x ∈ rec(K).
bool lemma_notrec_check(const HPolyhedron& h, const Vector& x);

/// Deterministic sample mix cycling through integer grid points, random
/// rational directions, gauge-scaled boundary points and recession-cone
/// points (falling back to random directions when rec(K) = {0}).
std::vector<Vector> sample_points(const HPolyhedron& h, std::uint64_t seed, std::size_t count);

}  // namespace minsub
