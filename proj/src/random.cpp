#include "minsub/random.hpp"

namespace minsub {

HPolyhedron random_hpolyhedron(Rng& rng, std::size_t dim, std::size_t raw_rows) {
  std::vector<Vector> rows;
  std::vector<Rational> rhs;
  while (rows.size() < raw_rows) {
    Vector a(dim);
    for (std::size_t c = 0; c < dim; ++c) a[c] = rng.uniform(-4, 4);
    if (a.is_zero()) continue;
    rows.push_back(std::move(a));
    rhs.push_back(make_rational(rng.uniform(1, 8), 2));
  }
  return normalize(rows, rhs);
}

}  // namespace minsub
