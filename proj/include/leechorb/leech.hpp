#pragma once

// Lattices in R^24 and the Leech lattice.
//
// Coordinates are integers at the global scale 1/(7*sqrt(8)): the MOG array
// entries of a vector written with prefactor 1/sqrt(8) are multiplied by 7.
// With the orthogonal frame (e_i|e_j) = 2 delta_ij this puts e_i at
// coordinate 28, and (u|v) = (sum u_i v_i) / 392.

#include "leechorb/coord_perm.hpp"
#include "leechorb/golay.hpp"
#include "leechorb/linalg.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace leechorb {

inline constexpr std::int64_t kInnerDenominator = 392;
inline constexpr std::int64_t kUnitCoord = 28;  // e_i

class LatticeVector {
 public:
  using Coords = std::array<std::int64_t, kLength>;

  constexpr LatticeVector() = default;
  constexpr explicit LatticeVector(const Coords& c) : coords_(c) {}

  /// Reads the 4x6 MOG array row by row (as it is printed) into coordinates.
  static LatticeVector from_array_rows(const std::array<std::array<std::int64_t, 6>, 4>& rows);
  static LatticeVector unit(int position, std::int64_t scale = kUnitCoord);

  const Coords& coords() const noexcept { return coords_; }
  std::int64_t operator[](int i) const { return coords_[i]; }  // 0-based
  bool is_zero() const noexcept;

  std::vector<Integer> to_integers() const;
  /// Throws std::overflow_error when an entry does not fit in 64 bits.
  static LatticeVector from_integers(std::span<const Integer> v);

  /// Overflow-checked arithmetic; throws std::overflow_error.
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& a);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  /// Space-separated integers.
  std::string to_string() const;
  /// MOG array (4 rows) of the coordinates.
  std::string to_array() const;

 private:
  Coords coords_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

LatticeVector apply(const CoordPerm& p, const LatticeVector& v);

/// (u|v) = sum(u_i v_i) / 392.
Rational inner(const LatticeVector& u, const LatticeVector& v);
Rational norm(const LatticeVector& v);
/// sum(u_i v_i), the numerator of inner() before reduction.
Integer raw_dot(const LatticeVector& u, const LatticeVector& v);

/// A sublattice of the ambient coordinate space.  The canonical basis is the
/// HNF of the generators, so two lattices are equal iff their HNF bases are.
/// A separate working basis (possibly LLL-reduced) spans the same lattice and
/// drives enumeration.
class IntegralLattice {
 public:
  /// The zero lattice.
  IntegralLattice() : hnf_(0, kLength), work_(0, kLength) {}

  static IntegralLattice from_generators(std::span<const LatticeVector> gens);
  /// Rows of m are generator coordinates; m must have 24 columns.
  static IntegralLattice from_rows(const IntMatrix& m);

  const IntMatrix& basis() const noexcept { return hnf_; }
  const IntMatrix& working_basis() const noexcept { return work_; }
  std::size_t rank() const noexcept { return hnf_.rows(); }

  std::vector<LatticeVector> basis_vectors() const;
  std::vector<LatticeVector> working_vectors() const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.hnf_ == b.hnf_; }

 private:
  friend IntegralLattice reduce_basis(const IntegralLattice& lattice);
  IntMatrix hnf_;
  IntMatrix work_;
};

/// The Leech generating family from a Golay code: (1/2)e_X for each code
/// generator X, (1/4)e_Omega - e_1, and e_i +- e_j for i < j.
std::vector<LatticeVector> leech_generators(const LinearCode& code);
IntegralLattice lattice_from_generators(std::span<const LatticeVector> gens);
IntegralLattice leech_lattice(const LinearCode& code);

bool contains(const IntegralLattice& lattice, const LatticeVector& v);
/// Integer coordinates of v in the canonical basis, if v is in the lattice.
std::optional<std::vector<Integer>> coordinates(const IntegralLattice& lattice, const LatticeVector& v);
/// True when every basis vector of `sub` lies in `lattice`.
bool is_sublattice(const IntegralLattice& sub, const IntegralLattice& lattice);

/// Pairwise inner products of the canonical basis.
RationalMatrix gram(const IntegralLattice& lattice);
/// Determinant of the Gram matrix (1 for the zero lattice).
Rational det_gram(const IntegralLattice& lattice);
/// Even: every norm integral and even, every inner product integral.
bool is_even(const IntegralLattice& lattice);

/// Same lattice, LLL-reduced working basis (delta = 99/100, exact rational
/// arithmetic).
IntegralLattice reduce_basis(const IntegralLattice& lattice);

struct EnumerationOptions {
  unsigned threads = 1;
};

/// All vectors a + offset with a in the lattice and |a + offset|^2 = target,
/// sorted lexicographically by coordinates.  The offset need not lie in the
/// span of the lattice; its orthogonal part only shifts the norm.  Throws
/// std::domain_error when the Gram matrix is not positive definite.
std::vector<LatticeVector> enumerate_norm(const IntegralLattice& lattice, const LatticeVector& offset,
                                          const Rational& target, const EnumerationOptions& opts = {});

/// Number of vectors enumerate_norm() would return, without storing them.
std::size_t count_norm(const IntegralLattice& lattice, const LatticeVector& offset, const Rational& target,
                       const EnumerationOptions& opts = {});

/// min |a + offset|^2 over a in the lattice.
Rational min_coset_norm(const IntegralLattice& lattice, const LatticeVector& offset,
                        const EnumerationOptions& opts = {});

}  // namespace leechorb
