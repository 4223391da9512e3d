#pragma once

#include <cstdint>
#include <random>

#include "minsub/polyhedra.hpp"
#include "minsub/rational.hpp"

namespace minsub {

/// Seeded generator with platform-independent draws (std distributions are
/// not reproducible across standard libraries, the raw engine is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1U) != 0; }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(long max_num, long max_den) {
    const long num = uniform(-max_num, max_num);
    const long den = uniform(1, max_den);
    return make_rational(num, den);
  }

  Vector vector(std::size_t dim, long max_num, long max_den) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational(max_num, max_den);
    return v;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random canonical K: `raw_rows` integer rows with entries in [-4, 4] and
/// right-hand sides in {1/2, 1, ..., 4}, then normalized. The canonical row
/// count can be smaller than `raw_rows`.
HPolyhedron random_hpolyhedron(Rng& rng, std::size_t dim, std::size_t raw_rows);

}  // namespace minsub
