#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "minsub/lp.hpp"
#include "minsub/random.hpp"

namespace minsub::oracle {

using namespace minsub::lp;

// Gaussian elimination on an augmented n x (n+1) system; false if singular.
inline bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational>& x) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return true;
}

// Brute-force oracle: every vertex of {x : rows, x >= 0} is the unique
// solution of some n constraints taken as equalities. Enumerates all
// n-subsets of rows and bounds, solves the square systems by Gaussian
// elimination and keeps the best feasible solution. Assumes nonnegative
// variables and a bounded feasible set.
inline std::optional<Rational> brute_force(const LinearProgram& p) {
  const std::size_t n = p.num_vars();
  std::vector<std::pair<Vector, Rational>> all;
  for (const auto& r : p.rows) all.emplace_back(r.coeffs, r.rhs);
  for (std::size_t j = 0; j < n; ++j) all.emplace_back(Vector::unit(n, j), Rational(0));

  const Vector c = p.sense == Sense::maximize ? p.objective : -p.objective;
  auto feasible = [&](const Vector& x) {
    for (std::size_t j = 0; j < n; ++j)
      if (x[j].sign() < 0) return false;
    for (const auto& r : p.rows) {
      const Rational v = dot(r.coeffs, x);
      if (r.relation == Relation::equal ? v != r.rhs : v > r.rhs) return false;
    }
    return true;
  };

  std::optional<Rational> best;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.end() - static_cast<long>(n), pick.end(), true);
  do {
    std::vector<std::vector<Rational>> a;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!pick[i]) continue;
      std::vector<Rational> row(all[i].first.entries());
      row.push_back(all[i].second);
      a.push_back(std::move(row));
    }
    std::vector<Rational> xs;
    if (!solve_square(a, xs)) continue;
    const Vector x(xs);
    if (!feasible(x)) continue;
    const Rational v = dot(c, x);
    if (!best || v > *best) best = v;
  } while (std::next_permutation(pick.begin(), pick.end()));
  if (best && p.sense == Sense::minimize) best = -*best;
  return best;
}

inline LinearProgram random_bounded_lp(Rng& rng) {
  LinearProgram p;
  const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
  const auto m = static_cast<std::size_t>(rng.uniform(1, 9));
  p.sense = rng.coin() ? Sense::maximize : Sense::minimize;
  p.objective = Vector(n);
  for (std::size_t j = 0; j < n; ++j) p.objective[j] = rng.uniform(-5, 5);
  p.bounds.assign(n, Bound::nonnegative);
  for (std::size_t i = 0; i < m; ++i) {
    Row r;
    r.coeffs = Vector(n);
    for (std::size_t j = 0; j < n; ++j) r.coeffs[j] = rng.uniform(-4, 4);
    r.rhs = rng.uniform(-3, 8);
    r.relation = rng.uniform(0, 5) == 0 ? Relation::equal : Relation::less_equal;
    p.rows.push_back(std::move(r));
  }
  Row cap;
  cap.coeffs = Vector(n);
  for (std::size_t j = 0; j < n; ++j) cap.coeffs[j] = 1;
  cap.rhs = 10;
  p.rows.push_back(std::move(cap));
  return p;
}

}  // namespace minsub::oracle
