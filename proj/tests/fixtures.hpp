#pragma once

#include <string>

#include "minsub/cuts.hpp"
#include "minsub/random.hpp"

namespace minsub::fixtures {

/// 2-D corner instance with a lattice-free body (a split or the triangle
/// conv{(0,0),(2,0),(0,2)}, mapped by a random unimodular transform and an
/// integer translation) and a shrunk copy of that body.
struct CutFixture {
  CornerInstance instance;
  SFreeBody body;
  SFreeBody shrunk;
  std::string family;
};

inline CutFixture random_2d_fixture(Rng& rng) {
  // Fractional point g in (0, 1)^2 in the reference frame.
  Vector g(2);
  for (std::size_t c = 0; c < 2; ++c) {
    const long den = rng.uniform(2, 7);
    g[c] = make_rational(rng.uniform(1, den - 1), den);
  }

  std::vector<Vector> rows;
  std::vector<Rational> rhs;
  std::string family;
  switch (rng.uniform(0, 2)) {
    case 0:
      family = "split x1";
      rows = {{1, 0}, {-1, 0}};
      rhs = {1, 0};
      break;
    case 1: {
      const Vector pi = rng.coin() ? Vector{1, 1} : Vector{1, -1};
      const Rational level = dot(pi, g);
      if (level.is_integer()) {
        family = "split x2";
        rows = {{0, 1}, {0, -1}};
        rhs = {1, 0};
      } else {
        family = "split " + to_string(pi);
        const Rational lo(level.floor());
        rows = {pi, -pi};
        rhs = {lo + 1, -lo};
      }
      break;
    }
    default:
      family = "triangle";
      rows = {{-1, 0}, {0, -1}, {1, 1}};
      rhs = {0, 0, 2};
      break;
  }

  // Unimodular U as a product of two shears; rows transform by U^{-T}.
  const long s1 = rng.uniform(-1, 1);
  const long s2 = rng.uniform(-1, 1);
  // U = [[1, s1], [0, 1]] * [[1, 0], [s2, 1]] = [[1 + s1 s2, s1], [s2, 1]]
  const Rational u00(1 + s1 * s2), u01(s1), u10(s2), u11(1);
  // det U = 1, so U^{-1} = [[u11, -u01], [-u10, u00]].
  const Rational i00 = u11, i01 = -u01, i10 = -u10, i11 = u00;
  const Vector t{rng.uniform(-2, 2), rng.uniform(-2, 2)};

  CornerInstance inst;
  inst.dim = 2;
  inst.f = Vector{u00 * g[0] + u01 * g[1], u10 * g[0] + u11 * g[1]} + t;

  std::vector<Vector> x_rows;
  std::vector<Rational> x_rhs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // a^T U^{-1} as a row vector.
    const Vector a{rows[i][0] * i00 + rows[i][1] * i10, rows[i][0] * i01 + rows[i][1] * i11};
    x_rows.push_back(a);
    x_rhs.push_back(rhs[i] + dot(a, t));
  }

  const auto num_rays = rng.uniform(2, 5);
  while (static_cast<long>(inst.rays.size()) < num_rays) {
    Vector r{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (!r.is_zero()) inst.rays.push_back(std::move(r));
  }
  if (rng.coin()) {
    inst.p_rows = {{-1, 0}, {0, -1}};
    inst.p_rhs = {Rational(3) - t[0], Rational(3) - t[1]};
  }

  Vector c;
  do c = Vector{rng.uniform(-3, 3), rng.uniform(-3, 3)};
  while (c.is_zero());
  const Rational delta = make_rational(rng.uniform(1, 4), 2);
  auto shrunk_rows = x_rows;
  auto shrunk_rhs = x_rhs;
  shrunk_rows.push_back(c);
  shrunk_rhs.push_back(dot(c, inst.f) + delta);
  auto body = SFreeBody::around(x_rows, x_rhs, inst.f);
  auto shrunk = SFreeBody::around(shrunk_rows, shrunk_rhs, inst.f);
  return CutFixture{std::move(inst), std::move(body), std::move(shrunk), family};
}

/// x = 1/2 + s1 - s2 over S = Z with B = [0, 1].
inline CornerInstance split_instance_1d() {
  CornerInstance inst;
  inst.dim = 1;
  inst.f = Vector{make_rational(1, 2)};
  inst.rays = {{1}, {-1}};
  return inst;
}

inline SFreeBody unit_interval_body(const Vector& f) { return SFreeBody::around({{1}, {-1}}, {1, 0}, f); }

}  // namespace minsub::fixtures
