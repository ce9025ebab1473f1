#pragma once

// The order-7 coordinate isometry of the Leech lattice, its averaging
// projection, and the sublattices it determines.

#include "leechorb/coord_perm.hpp"
#include "leechorb/golay.hpp"
#include "leechorb/leech.hpp"
#include "leechorb/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace leechorb {

/// Thrown when no admissible permutation exists for a generator choice.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Searches for a code automorphism fixing positions 1, 9, 17 and acting as
/// a 7-cycle on each of {2..8}, {10..16}, {18..24}.  Cycles that repeat the
/// same pattern on the three blocks are tried first, then independent ones.
/// The first hit in a fixed search order is returned.
CoordPerm find_tau(const LinearCode& code);

/// Multiplicities of the eigenvalues exp(2 pi i j / n), j = 0..n-1, of the
/// permutation matrix.  Throws std::invalid_argument unless p^n = 1.
std::vector<int> eigen_multiplicities(const CoordPerm& p, int n);

/// Trace of the permutation matrix (number of fixed positions).
int trace(const CoordPerm& p);

/// The averaging operator (1/n) sum_i p^i of the cyclic group <p>.
class ProjectionData {
 public:
  explicit ProjectionData(const CoordPerm& p);

  const CoordPerm& generator() const noexcept { return perm_; }
  int order() const noexcept { return order_; }
  /// Orbits of <p> on the positions, sorted by smallest element.
  const std::vector<std::vector<int>>& orbits() const noexcept { return orbits_; }

  /// The 24x24 matrix (1/n) sum_i P^i, built term by term from the powers.
  RationalMatrix matrix() const;

  /// Orbit averages; exact rationals.
  std::vector<Rational> project(const LatticeVector& v) const;
  /// Orbit averages when they are all integers; throws std::domain_error
  /// otherwise.
  LatticeVector project_integral(const LatticeVector& v) const;
  /// True when v is constant on every orbit.
  bool is_fixed(const LatticeVector& v) const;

 private:
  CoordPerm perm_;
  int order_;
  std::vector<std::vector<int>> orbits_;
};

/// True when p maps every basis vector of the lattice into the lattice.
bool preserves(const IntegralLattice& lattice, const CoordPerm& p);

/// {v in L : p v = v}.  Throws std::invalid_argument if p does not preserve L.
IntegralLattice fixed_sublattice(const IntegralLattice& lattice, const CoordPerm& p);

/// The lattice spanned by the orbit averages of the basis of L.
IntegralLattice projection_lattice(const IntegralLattice& lattice, const CoordPerm& p);

/// {v in L : (v|s) = 0 for every s in S}.
IntegralLattice orthogonal_sublattice(const IntegralLattice& lattice, const IntegralLattice& annihilated);

/// Span of {b - p^r b : b in basis of L}.
IntegralLattice one_minus_power_image(const IntegralLattice& lattice, const CoordPerm& p, int r);

/// [outer : inner] for sublattices of equal rank.  Throws
/// std::invalid_argument when inner is not a full-rank sublattice of outer.
Integer lattice_index(const IntegralLattice& outer, const IntegralLattice& inner);

}  // namespace leechorb
