#pragma once

#include "leechorb/golay.hpp"
#include "leechorb/isometry.hpp"
#include "leechorb/leech.hpp"
#include "leechorb/orbifold.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace leechorb;

// Objects built once per test binary.
struct World {
  LinearCode code = mog_golay();
  CoordPerm tau = find_tau(code);
  IntegralLattice leech = leech_lattice(code);
  IntegralLattice leech_reduced = reduce_basis(leech);
  IntegralLattice fixed = fixed_sublattice(leech, tau);
  IntegralLattice projected = reduce_basis(projection_lattice(leech, tau));
  IntegralLattice orthogonal = orthogonal_sublattice(leech, fixed);
  LatticeVector f = reference_f();
  std::vector<LatticeVector> betas = reference_betas();
};

inline const World& world() {
  static const World w;
  return w;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline std::vector<Integer> row_vector(const IntMatrix& m, std::size_t i) {
  auto r = m.row(i);
  return {r.begin(), r.end()};
}

// c * m for an integer coefficient vector.
inline std::vector<Integer> combine(std::span<const long> c, const IntMatrix& m) {
  std::vector<Integer> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += c[i] * m(i, j);
  return out;
}

// All integer combinations of the rows of m with coefficients in [-k, k].
inline std::vector<std::vector<Integer>> box_span(const IntMatrix& m, long k) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> c(m.rows(), -k);
  for (;;) {
    out.push_back(combine(c, m));
    std::size_t i = 0;
    while (i < c.size() && c[i] == k) c[i++] = -k;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

// Sum of x_i^2 over the vector.
inline Integer square_sum(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace testing_support
