#pragma once

// The binary Golay code in the 4x6 MOG arrangement.
//
// Positions are numbered column-major: column c (1..6) of the array holds
// positions 4(c-1)+1 .. 4c, top to bottom.  The top-left cell of each pair
// of columns is therefore position 1, 9 or 17.

#include "leechorb/coord_perm.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leechorb {

/// A word of length 24; bit i-1 holds position i.
class Codeword {
 public:
  constexpr Codeword() = default;
  constexpr explicit Codeword(std::uint32_t bits) : bits_(bits & 0xFFFFFFu) {}

  /// Word with ones exactly at the given 1-based positions.
  static Codeword from_positions(std::span<const int> positions);
  /// 24 characters '0'/'1' in position order.
  static Codeword parse(const std::string& text);

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool operator[](int position) const noexcept { return bits_ >> (position - 1) & 1u; }
  int weight() const noexcept;
  std::vector<int> support() const;

  /// 24 characters '0'/'1'.
  std::string to_string() const;
  /// 4 rows of the MOG array, '*' for 1 and ' ' for 0, pairs of columns
  /// separated by '|'.
  std::string to_array() const;

  friend constexpr Codeword operator+(Codeword a, Codeword b) { return Codeword(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Codeword, Codeword) = default;
  friend constexpr auto operator<=>(Codeword, Codeword) = default;

 private:
  std::uint32_t bits_ = 0;
};

Codeword apply(const CoordPerm& p, Codeword w);

/// Binary linear code of length 24 given by independent generators.
class LinearCode {
 public:
  LinearCode() = default;
  /// Generators may be dependent; a reduced echelon basis is kept.
  explicit LinearCode(std::span<const Codeword> generators);

  const std::vector<Codeword>& generators() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  bool contains(Codeword w) const;
  /// All 2^dimension codewords, sorted by bit value.
  std::vector<Codeword> codewords() const;
  /// Weight -> count over all codewords.
  std::map<int, std::size_t> weight_distribution() const;
  /// Smallest nonzero weight; 0 for the zero code.
  int minimum_weight() const;

  bool is_self_dual() const;
  bool is_automorphism(const CoordPerm& p) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  std::vector<Codeword> basis_;  // reduced echelon, canonical
};

/// Thrown when a code fails the structural self-check at construction.
class CodeConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The hard-coded MOG Golay code, verified on construction.
LinearCode mog_golay();

/// Builds a code from generator words and runs the same structural checks
/// as mog_golay(): dimension 12, minimum weight 8, the six columns form a
/// sextet, and the three column-pair octads are codewords.
LinearCode checked_golay(std::span<const Codeword> generators);

/// The twelve generator words behind mog_golay().
std::span<const Codeword> mog_golay_generators();

/// Octads {1..8}, {9..16}, {17..24}.
std::array<Codeword, 3> column_pair_octads();

/// The six 4-element columns of the MOG array.
std::array<Codeword, 6> mog_columns();

/// Subcode of words vanishing at every listed position.
LinearCode vanishing_subcode(const LinearCode& code, std::span<const int> positions);

/// GF(2) span of {w + p(w)}.  Throws std::invalid_argument when p is not an
/// automorphism of the code.
LinearCode image_one_minus_perm(const LinearCode& code, const CoordPerm& p);

/// True when every word of `sub` lies in `code`.
bool is_subcode(const LinearCode& sub, const LinearCode& code);

}  // namespace leechorb
