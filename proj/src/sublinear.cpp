#include "minsub/sublinear.hpp"

#include "minsub/lp.hpp"
#include "minsub/random.hpp"

namespace minsub {

Rational rho_eval(const HPolyhedron& h, const Vector& x) {
  Rational best = dot(h.row(0), x);
  for (std::size_t i = 1; i < h.size(); ++i) best = max(best, dot(h.row(i), x));
  return best;
}

Rational gauge_eval(const HPolyhedron& h, const Vector& x) { return max(Rational(0), rho_eval(h, x)); }

Rational support_eval(const SupportFunction& c, const Vector& x) {
  c.generator.validate();
  const auto& pts = c.generator.points;
  Rational best = dot(pts.front(), x);
  for (std::size_t i = 1; i < pts.size(); ++i) best = max(best, dot(pts[i], x));
  return best;
}

Rational polar_support_lp(const HPolyhedron& h, const Vector& x) {
  require_same_dim(h.row(0), x);
  const std::size_t k = h.size() + 1;  // multiplier 0 belongs to the origin
  lp::LinearProgram p;
  p.objective = Vector(k);
  for (std::size_t i = 0; i < h.size(); ++i) p.objective[i + 1] = dot(h.row(i), x);
  p.bounds.assign(k, lp::Bound::nonnegative);
  Vector ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
  p.rows.push_back({ones, lp::Relation::equal, 1});
  const auto out = lp::solve(p);
  if (out.status != lp::Status::optimal)
    throw InternalConsistencyError("support LP over the polar is not optimal");
  return *out.value;
}

namespace {

// sup_{x in K} <x, v>; nullopt when unbounded.
std::optional<Rational> support_of_K(const HPolyhedron& h, const Vector& v) {
  lp::LinearProgram p;
  p.objective = v;
  p.bounds.assign(h.dim(), lp::Bound::free);
  for (const auto& r : h.rows()) p.rows.push_back({r, lp::Relation::less_equal, 1});
  const auto out = lp::solve(p);
  if (out.status != lp::Status::optimal) return std::nullopt;
  return out.value;
}

}  // namespace

bool check_unit_ball(const SupportFunction& c, const HPolyhedron& h) {
  c.generator.validate();
  if (c.generator.dim != h.dim()) throw DimensionMismatch("support function and K differ in dimension");
  for (const auto& row : h.rows())
    if (!hull_membership(row, c.generator).inside) return false;
  for (const auto& v : c.generator.points) {
    const auto s = support_of_K(h, v);
    if (!s || *s > 1) return false;
  }
  return true;
}

SupportFunction random_valid_C(const HPolyhedron& h, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  SupportFunction c;
  c.generator.dim = h.dim();
  c.generator.points = h.rows();
  for (std::size_t n = 0; n < count; ++n) {
    // Integer weights on {0} ∪ rows; the origin's weight only shrinks the point.
    std::vector<long> w(h.size() + 1);
    long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& wi : w) {
        wi = rng.uniform(0, 4);
        total += wi;
      }
    }
    Vector p(h.dim());
    for (std::size_t i = 0; i < h.size(); ++i)
      if (w[i + 1] != 0) p += h.row(i) * make_rational(w[i + 1], total);
    c.generator.points.push_back(std::move(p));
  }
  return c;
}

SandwichReport sandwich_check(const HPolyhedron& h, const SupportFunction& c,
                              const std::vector<Vector>& samples) {
  if (!check_unit_ball(c, h)) throw PreconditionError("sigma_C does not have K as its unit ball");
  SandwichReport report;
  for (const auto& x : samples) {
    Rational rho = rho_eval(h, x);
    Rational sigma = support_eval(c, x);
    Rational gamma = gauge_eval(h, x);
    ++report.samples_checked;
    if (rho > sigma || sigma > gamma)
      report.violations.push_back({x, std::move(rho), std::move(sigma), std::move(gamma)});
  }
  return report;
}

bool reconstruct_check(const HPolyhedron& h, const std::vector<Vector>& samples) {
  for (const auto& x : samples) {
    const Rational rho = rho_eval(h, x);
    const bool in_k = membership(h, x).position != Position::outside;
    if (in_k != (rho <= 1)) return false;
    const Rational gamma = gauge_eval(h, x);
    if (gamma.sign() > 0) {
      const Vector scaled = x * (Rational(1) / gamma);
      if (rho_eval(h, scaled) != 1) return false;
      if (membership(h, scaled).position != Position::boundary) return false;
    }
  }
  return true;
}

bool lemma_notrec_check(const HPolyhedron& h, const Vector& x) {
  if (in_recession(h, x)) throw PreconditionError("x lies in the recession cone of K");
  const Rational rho = rho_eval(h, x);
  return rho == gauge_eval(h, x) && rho == polar_support_lp(h, x);
}

namespace {

std::optional<Vector> recession_point(const HPolyhedron& h, Rng& rng) {
  const std::size_t n = h.dim();
  const Vector base = rng.vector(n, 6, 3);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    Vector x = base;
    for (std::size_t c = 0; c < n; ++c)
      if ((mask >> c) & 1U) x[c] = -x[c];
    if (!x.is_zero() && in_recession(h, x)) return x;
  }
  // Vertex of rec(K) ∩ [-1, 1]^n maximizing a random direction.
  lp::LinearProgram p;
  p.objective = rng.vector(n, 5, 1);
  p.bounds.assign(n, lp::Bound::free);
  for (const auto& r : h.rows()) p.rows.push_back({r, lp::Relation::less_equal, 0});
  for (std::size_t c = 0; c < n; ++c) {
    p.rows.push_back({Vector::unit(n, c), lp::Relation::less_equal, 1});
    p.rows.push_back({-Vector::unit(n, c), lp::Relation::less_equal, 1});
  }
  const auto out = lp::solve(p);
  if (out.status != lp::Status::optimal || out.point->is_zero()) return std::nullopt;
  return *out.point * Rational(rng.uniform(1, 4));
}

}  // namespace

std::vector<Vector> sample_points(const HPolyhedron& h, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const std::size_t n = h.dim();
  const bool bounded = is_bounded(h);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: {
        Vector x(n);
        for (std::size_t c = 0; c < n; ++c) x[c] = rng.uniform(-3, 3);
        out.push_back(std::move(x));
        break;
      }
      case 1:
        out.push_back(rng.vector(n, 10, 5));
        break;
      case 2: {
        Vector x = rng.vector(n, 10, 5);
        const Rational gamma = gauge_eval(h, x);
        out.push_back(gamma.sign() > 0 ? x * (Rational(1) / gamma) : x);
        break;
      }
      default: {
        std::optional<Vector> x;
        if (!bounded) x = recession_point(h, rng);
        out.push_back(x ? *x : rng.vector(n, 10, 5));
        break;
      }
    }
  }
  return out;
}

}  // namespace minsub
