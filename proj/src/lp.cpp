#include "minsub/lp.hpp"

#include <cassert>
#include <utility>

namespace minsub::lp {

void LinearProgram::validate() const {
  const std::size_t n = num_vars();
  if (n == 0) throw MalformedProgram("linear program needs at least one variable");
  if (bounds.size() != n)
    throw MalformedProgram("bounds list has " + std::to_string(bounds.size()) +
                           " entries, expected " + std::to_string(n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].coeffs.dim() != n)
      throw MalformedProgram("row " + std::to_string(i) + " has dimension " +
                             std::to_string(rows[i].coeffs.dim()) + ", expected " +
                             std::to_string(n));
}

std::string to_string(Status status) {
  switch (status) {
    case Status::optimal:
      return "optimal";
    case Status::unbounded:
      return "unbounded";
    case Status::infeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Equality-form program  A x = b, x >= 0, b >= 0  derived from a
// LinearProgram, with enough bookkeeping to map solutions back.
struct StandardForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Matrix a;                            // rows x cols
  std::vector<Rational> b;             // >= 0
  std::vector<Rational> cost;          // maximize-form costs, 0 on slack/artificial
  std::vector<int> flip;               // +1 / -1 per row
  std::vector<std::size_t> plus_col;   // original var -> column
  std::vector<long> minus_col;         // original var -> negative part column or -1
  std::vector<bool> artificial;        // per column
  std::vector<long> initial_basis;     // per row
};

StandardForm to_standard_form(const LinearProgram& p) {
  StandardForm s;
  const std::size_t n = p.num_vars();
  const std::size_t m = p.rows.size();
  s.rows = m;

  std::size_t col = 0;
  s.plus_col.resize(n);
  s.minus_col.assign(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    s.plus_col[j] = col++;
    if (p.bounds[j] == Bound::free) s.minus_col[j] = static_cast<long>(col++);
  }

  s.flip.resize(m);
  std::vector<long> slack_col(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    s.flip[i] = p.rows[i].rhs.sign() < 0 ? -1 : 1;
    if (p.rows[i].relation == Relation::less_equal) slack_col[i] = static_cast<long>(col++);
  }
  std::vector<long> art_col(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const bool slack_basic = slack_col[i] >= 0 && s.flip[i] > 0;
    if (!slack_basic) art_col[i] = static_cast<long>(col++);
  }
  s.cols = col;

  s.a.assign(m, std::vector<Rational>(s.cols));
  s.b.resize(m);
  s.initial_basis.resize(m);
  s.artificial.assign(s.cols, false);
  const Rational sign_flip(-1);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational f(s.flip[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = p.rows[i].coeffs[j] * f;
      s.a[i][s.plus_col[j]] = v;
      if (s.minus_col[j] >= 0) s.a[i][static_cast<std::size_t>(s.minus_col[j])] = -v;
    }
    if (slack_col[i] >= 0) s.a[i][static_cast<std::size_t>(slack_col[i])] = f;
    s.b[i] = p.rows[i].rhs * f;
    if (art_col[i] >= 0) {
      s.a[i][static_cast<std::size_t>(art_col[i])] = 1;
      s.artificial[static_cast<std::size_t>(art_col[i])] = true;
      s.initial_basis[i] = art_col[i];
    } else {
      s.initial_basis[i] = slack_col[i];
    }
  }

  s.cost.assign(s.cols, Rational(0));
  const bool maximize = p.sense == Sense::maximize;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c = maximize ? p.objective[j] : -p.objective[j];
    s.cost[s.plus_col[j]] = c;
    if (s.minus_col[j] >= 0) s.cost[static_cast<std::size_t>(s.minus_col[j])] = -c;
  }
  return s;
}

// Dense tableau B^{-1}[A | b] with the basis kept explicitly.
class Tableau {
 public:
  explicit Tableau(const StandardForm& s) : t_(s.a), basis_(s.rows) {
    for (std::size_t i = 0; i < s.rows; ++i) {
      t_[i].push_back(s.b[i]);
      basis_[i] = static_cast<std::size_t>(s.initial_basis[i]);
    }
    cols_ = s.cols;
  }

  std::size_t rows() const { return t_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  const Rational& rhs(std::size_t i) const { return t_[i][cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / t_[r][c];
    for (auto& v : t_[r]) v *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      const Rational factor = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= factor * t_[r][j];
    }
    basis_[r] = c;
  }

  struct Result {
    bool unbounded = false;
    std::size_t entering = 0;
  };

  // Maximizes cost^T x over columns allowed to enter. Bland's rule: the
  // lowest-index improving column enters, ties in the ratio test go to the
  // lowest-index basic variable.
  Result maximize(const std::vector<Rational>& cost, const std::vector<bool>& may_enter) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!may_enter[j]) continue;
        if (reduced_cost(cost, j).sign() > 0) entering = j;
      }
      if (!entering) return {};
      const std::size_t e = *entering;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][e].sign() <= 0) continue;
        const Rational ratio = rhs(i) / t_[i][e];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return {true, e};
      pivot(*leave, e);
    }
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!t_[i][j].is_zero()) r -= cost[basis_[i]] * t_[i][j];
    return r;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v;
    for (std::size_t i = 0; i < t_.size(); ++i) v += cost[basis_[i]] * rhs(i);
    return v;
  }

 private:
  Matrix t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_ = 0;
};

// Solves B^T y = c_B for the basis columns of the standard-form matrix.
std::vector<Rational> basis_duals(const StandardForm& s, const std::vector<std::size_t>& basis,
                                  const std::vector<Rational>& cost) {
  const std::size_t m = s.rows;
  // Augmented system: row k is column basis[k] of A, rhs cost[basis[k]].
  Matrix sys(m, std::vector<Rational>(m + 1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) sys[k][i] = s.a[i][basis[k]];
    sys[k][m] = cost[basis[k]];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && sys[piv][col].is_zero()) ++piv;
    assert(piv < m && "basis matrix must be nonsingular");
    std::swap(sys[piv], sys[col]);
    const Rational inv = Rational(1) / sys[col][col];
    for (auto& v : sys[col]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sys[r][col].is_zero()) continue;
      const Rational factor = sys[r][col];
      for (std::size_t j = col; j <= m; ++j) sys[r][j] -= factor * sys[col][j];
    }
  }
  std::vector<Rational> y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = sys[i][m];
  return y;
}

Vector original_duals(const StandardForm& s, const std::vector<Rational>& y_std) {
  Vector y(s.rows);
  for (std::size_t i = 0; i < s.rows; ++i) y[i] = y_std[i] * Rational(s.flip[i]);
  return y;
}

Vector original_point(const StandardForm& s, const std::vector<Rational>& x_std) {
  Vector x(s.plus_col.size());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    x[j] = x_std[s.plus_col[j]];
    if (s.minus_col[j] >= 0) x[j] -= x_std[static_cast<std::size_t>(s.minus_col[j])];
  }
  return x;
}

std::vector<Rational> basic_solution(const StandardForm& s, const Tableau& t) {
  std::vector<Rational> x(s.cols);
  for (std::size_t i = 0; i < t.rows(); ++i) x[t.basis()[i]] = t.rhs(i);
  return x;
}

}  // namespace

Outcome solve(const LinearProgram& program) {
  program.validate();
  const StandardForm s = to_standard_form(program);
  Tableau tableau(s);

  bool has_artificial = false;
  for (bool a : s.artificial) has_artificial = has_artificial || a;

  if (has_artificial) {
    std::vector<Rational> phase1(s.cols);
    for (std::size_t j = 0; j < s.cols; ++j)
      if (s.artificial[j]) phase1[j] = -1;
    const std::vector<bool> all(s.cols, true);
    tableau.maximize(phase1, all);  // bounded above by 0
    if (tableau.objective(phase1).sign() < 0) {
      Outcome out;
      out.status = Status::infeasible;
      out.dual = original_duals(s, basis_duals(s, tableau.basis(), phase1));
      return out;
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are linearly dependent and stay inert.
    for (std::size_t i = 0; i < tableau.rows(); ++i) {
      if (!s.artificial[tableau.basis()[i]]) continue;
      for (std::size_t j = 0; j < s.cols; ++j) {
        if (!s.artificial[j] && !tableau.at(i, j).is_zero()) {
          tableau.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<bool> may_enter(s.cols);
  for (std::size_t j = 0; j < s.cols; ++j) may_enter[j] = !s.artificial[j];
  const auto result = tableau.maximize(s.cost, may_enter);

  Outcome out;
  out.point = original_point(s, basic_solution(s, tableau));
  if (result.unbounded) {
    std::vector<Rational> d(s.cols);
    d[result.entering] = 1;
    for (std::size_t i = 0; i < tableau.rows(); ++i)
      d[tableau.basis()[i]] = -tableau.at(i, result.entering);
    out.status = Status::unbounded;
    out.ray = original_point(s, d);
    return out;
  }
  out.status = Status::optimal;
  const Rational max_value = tableau.objective(s.cost);
  out.value = program.sense == Sense::maximize ? max_value : -max_value;
  out.dual = original_duals(s, basis_duals(s, tableau.basis(), s.cost));
  return out;
}

namespace {

Vector max_form_objective(const LinearProgram& p) {
  return p.sense == Sense::maximize ? p.objective : -p.objective;
}

bool is_feasible(const LinearProgram& p, const Vector& x) {
  if (x.dim() != p.num_vars()) return false;
  for (std::size_t j = 0; j < x.dim(); ++j)
    if (p.bounds[j] == Bound::nonnegative && x[j].sign() < 0) return false;
  for (const auto& row : p.rows) {
    const Rational lhs = dot(row.coeffs, x);
    if (row.relation == Relation::equal ? lhs != row.rhs : lhs > row.rhs) return false;
  }
  return true;
}

// Checks y's sign pattern and returns A^T y, or nullopt when y is malformed.
std::optional<Vector> transpose_product(const LinearProgram& p, const Vector& y) {
  if (y.dim() != p.rows.size()) return std::nullopt;
  Vector aty(p.num_vars());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (p.rows[i].relation == Relation::less_equal && y[i].sign() < 0) return std::nullopt;
    if (y[i].is_zero()) continue;
    aty += p.rows[i].coeffs * y[i];
  }
  return aty;
}

Rational rhs_product(const LinearProgram& p, const Vector& y) {
  Rational v;
  for (std::size_t i = 0; i < p.rows.size(); ++i) v += p.rows[i].rhs * y[i];
  return v;
}

}  // namespace

bool verify_certificate(const LinearProgram& program, const Outcome& outcome) {
  try {
    program.validate();
  } catch (const MalformedProgram&) {
    return false;
  }
  const Vector c = max_form_objective(program);
  const std::size_t n = program.num_vars();

  switch (outcome.status) {
    case Status::optimal: {
      if (!outcome.point || !outcome.value || !outcome.dual) return false;
      if (!is_feasible(program, *outcome.point)) return false;
      const Rational max_value =
          program.sense == Sense::maximize ? *outcome.value : -*outcome.value;
      if (dot(c, *outcome.point) != max_value) return false;
      const auto aty = transpose_product(program, *outcome.dual);
      if (!aty) return false;
      for (std::size_t j = 0; j < n; ++j) {
        const bool ok = program.bounds[j] == Bound::free ? (*aty)[j] == c[j] : (*aty)[j] >= c[j];
        if (!ok) return false;
      }
      return rhs_product(program, *outcome.dual) == max_value;
    }
    case Status::unbounded: {
      if (!outcome.point || !outcome.ray) return false;
      if (!is_feasible(program, *outcome.point)) return false;
      const Vector& d = *outcome.ray;
      if (d.dim() != n) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (program.bounds[j] == Bound::nonnegative && d[j].sign() < 0) return false;
      for (const auto& row : program.rows) {
        const int s = dot(row.coeffs, d).sign();
        if (row.relation == Relation::equal ? s != 0 : s > 0) return false;
      }
      return dot(c, d).sign() > 0;
    }
    case Status::infeasible: {
      if (!outcome.dual) return false;
      const auto aty = transpose_product(program, *outcome.dual);
      if (!aty) return false;
      for (std::size_t j = 0; j < n; ++j) {
        const int s = (*aty)[j].sign();
        if (program.bounds[j] == Bound::free ? s != 0 : s < 0) return false;
      }
      return rhs_product(program, *outcome.dual).sign() < 0;
    }
  }
  return false;
}

}  // namespace minsub::lp
