#pragma once

#include <cstdint>
#include <random>

#include "omdual/lawrence.hpp"
#include "omdual/oriented_matroid.hpp"
#include "omdual/simplicial_complex.hpp"

namespace omdual {

// Deterministic random source; all draws go through one engine so a seed
// pins every downstream artifact.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

inline RatMat random_int_matrix(Rng& rng, int rows, int cols, int bound) {
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-bound, bound));
  return m;
}

struct RandomAffine {
  RatMat matrix;  // d x (n+1), last column is f
  AffineOM affine;
};

/**
 * Draws a full-row-rank integer matrix with a distinguished last column f,
 * rejecting draws where f would be a loop (zero column) or a coloop
 * (needed by the dual side of the main duality checks). Deterministic for
 * a fixed seed; rejection keeps drawing from the same stream.
 */
inline RandomAffine random_affine_om(std::uint64_t seed, int dmax, int nmax,
                                     int bound) {
  Rng rng(seed);
  while (true) {
    const int d = rng.uniform(1, dmax);
    const int n = rng.uniform(d, nmax);
    RatMat m = random_int_matrix(rng, d, n + 1, bound);
    if (rank(m) != d) continue;
    if (m.col(n).isZero()) continue;
    if (rank(m.leftCols(n)) != d) continue;  // f must not be a coloop
    OrientedMatroid om = om_from_matrix(m, GroundSet::numbered_with_f(n));
    RandomAffine out{std::move(m), make_affine(std::move(om), "f")};
    return out;
  }
}

// Full-row-rank matrix without zero columns; loop-free input for the
// Lawrence facet-count law.
inline RatMat random_loopfree_matrix(Rng& rng, int dmax, int nmax, int bound) {
  while (true) {
    const int d = rng.uniform(1, dmax);
    const int n = rng.uniform(d, nmax);
    RatMat m = random_int_matrix(rng, d, n, bound);
    if (rank(m) != d) continue;
    bool zero_col = false;
    for (int j = 0; j < n && !zero_col; ++j) zero_col = m.col(j).isZero();
    if (zero_col) continue;
    return m;
  }
}

inline SimplicialComplex random_complex(Rng& rng, int max_vertices) {
  const int n = rng.uniform(1, max_vertices);
  const int count = rng.uniform(0, 7);
  std::vector<Mask> faces;
  for (int i = 0; i < count; ++i)
    faces.push_back(static_cast<Mask>(rng.raw()) & full_mask(n));
  return SimplicialComplex::from_masks(GroundSet::numbered(n), std::move(faces));
}

}  // namespace omdual
