#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace leechorb {

inline constexpr int kLength = 24;

/// A permutation of the 24 coordinate positions.  Positions are 1-based in
/// the public interface (the MOG numbering); storage is 0-based.
class CoordPerm {
 public:
  /// Identity.
  CoordPerm();

  /// images[i-1] = image of position i.  Throws if not a bijection of 1..24.
  static CoordPerm from_images(const std::array<int, kLength>& images);

  /// Parses cycle notation such as "(2 3 4)(10 11)"; omitted positions are
  /// fixed.  Throws std::invalid_argument on malformed input.
  static CoordPerm from_cycles(const std::string& text);

  int operator()(int position) const { return images_[position - 1] + 1; }

  /// (p * q)(i) = p(q(i)).
  friend CoordPerm operator*(const CoordPerm& p, const CoordPerm& q);
  friend bool operator==(const CoordPerm&, const CoordPerm&) = default;

  CoordPerm inverse() const;
  CoordPerm pow(long exponent) const;
  int order() const;
  bool is_identity() const;

  std::vector<int> fixed_points() const;
  /// Cycles of length >= 2, each starting at its smallest position, sorted.
  std::vector<std::vector<int>> cycles() const;
  /// All orbits including fixed points, sorted by smallest element.
  std::vector<std::vector<int>> orbits() const;

  /// One-line cycle notation with fixed points omitted; "()" for identity.
  std::string to_cycle_string() const;

  /// Moves the entry at position i to position p(i).
  template <class T>
  std::array<T, kLength> permute(const std::array<T, kLength>& v) const {
    std::array<T, kLength> out{};
    for (int i = 0; i < kLength; ++i) out[images_[i]] = v[i];
    return out;
  }

  /// Same action on a 24-bit set (bit i-1 represents position i).
  std::uint32_t permute_bits(std::uint32_t bits) const;

 private:
  std::array<std::uint8_t, kLength> images_{};
};

}  // namespace leechorb
