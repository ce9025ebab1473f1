#include "leechorb/golay.hpp"

#include "leechorb/linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace leechorb {

Codeword Codeword::from_positions(std::span<const int> positions) {
  std::uint32_t bits = 0;
  for (int p : positions) {
    if (p < 1 || p > kLength) throw std::invalid_argument("Codeword: position out of range");
    bits |= 1u << (p - 1);
  }
  return Codeword(bits);
}

Codeword Codeword::parse(const std::string& text) {
  if (text.size() != kLength) throw std::invalid_argument("Codeword: expected 24 characters, got '" + text + "'");
  std::uint32_t bits = 0;
  for (int i = 0; i < kLength; ++i) {
    if (text[i] == '1')
      bits |= 1u << i;
    else if (text[i] != '0')
      throw std::invalid_argument("Codeword: invalid character in '" + text + "'");
  }
  return Codeword(bits);
}

int Codeword::weight() const noexcept { return std::popcount(bits_); }

std::vector<int> Codeword::support() const {
  std::vector<int> out;
  for (int i = 1; i <= kLength; ++i)
    if ((*this)[i]) out.push_back(i);
  return out;
}

std::string Codeword::to_string() const {
  std::string s(kLength, '0');
  for (int i = 0; i < kLength; ++i)
    if (bits_ >> i & 1u) s[i] = '1';
  return s;
}

std::string Codeword::to_array() const {
  std::ostringstream os;
  for (int row = 0; row < 4; ++row) {
    os << '|';
    for (int col = 0; col < 6; ++col) {
      os << ((*this)[4 * col + row + 1] ? '*' : ' ');
      if (col % 2 == 1) os << '|';
    }
    os << '\n';
  }
  return os.str();
}

Codeword apply(const CoordPerm& p, Codeword w) { return Codeword(p.permute_bits(w.bits())); }

LinearCode::LinearCode(std::span<const Codeword> generators) {
  std::vector<std::uint64_t> rows;
  rows.reserve(generators.size());
  for (auto g : generators) rows.push_back(g.bits());
  for (auto r : gf2_echelon(std::move(rows))) basis_.emplace_back(static_cast<std::uint32_t>(r));
}

bool LinearCode::contains(Codeword w) const {
  std::uint32_t x = w.bits();
  for (auto b : basis_)
    if (x & (b.bits() & -b.bits())) x ^= b.bits();
  return x == 0;
}

std::vector<Codeword> LinearCode::codewords() const {
  const std::size_t k = basis_.size();
  std::vector<Codeword> out;
  out.reserve(std::size_t{1} << k);
  // Gray-code walk: one XOR per word.
  std::uint32_t w = 0;
  out.emplace_back(w);
  for (std::uint32_t i = 1; i < (1u << k); ++i) {
    w ^= basis_[std::countr_zero(i)].bits();
    out.emplace_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, std::size_t> LinearCode::weight_distribution() const {
  std::map<int, std::size_t> dist;
  for (auto w : codewords()) ++dist[w.weight()];
  return dist;
}

int LinearCode::minimum_weight() const {
  int best = 0;
  for (auto w : codewords())
    if (w.weight() > 0 && (best == 0 || w.weight() < best)) best = w.weight();
  return best;
}

bool LinearCode::is_self_dual() const {
  if (2 * dimension() != kLength) return false;
  for (auto a : basis_)
    for (auto b : basis_)
      if (std::popcount(a.bits() & b.bits()) % 2 != 0) return false;
  return true;
}

bool LinearCode::is_automorphism(const CoordPerm& p) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](Codeword g) { return contains(apply(p, g)); });
}

namespace {

// Reduced echelon basis of the hexacode-balance Golay code: a word is in the
// code iff every column has the parity of the top row and the column scores
// (row labels 0, 1, w, w-bar summed in GF(4)) form a hexacode word.
constexpr std::array<const char*, 12> kMogGenerators = {
    "100000010001011100100100", "010000010001010001001110", "001000010001001000011101",
    "000100010001000101111000", "000010010000011000111010", "000001010000010101100011",
    "000000110000001101010110", "000000001001011001101001", "000000000101010101010101",
    "000000000011001100110011", "000000000000111100001111", "000000000000000011111111",
};

const std::vector<Codeword>& generator_words() {
  static const std::vector<Codeword> words = [] {
    std::vector<Codeword> w;
    for (const char* s : kMogGenerators) w.push_back(Codeword::parse(s));
    return w;
  }();
  return words;
}

}  // namespace

std::span<const Codeword> mog_golay_generators() { return generator_words(); }

std::array<Codeword, 3> column_pair_octads() {
  return {Codeword(0x0000FFu), Codeword(0x00FF00u), Codeword(0xFF0000u)};
}

std::array<Codeword, 6> mog_columns() {
  std::array<Codeword, 6> cols;
  for (int c = 0; c < 6; ++c) cols[c] = Codeword(0xFu << (4 * c));
  return cols;
}

LinearCode checked_golay(std::span<const Codeword> generators) {
  LinearCode code(generators);
  if (code.dimension() != 12)
    throw CodeConstructionError("Golay self-check: dimension " + std::to_string(code.dimension()) + ", expected 12");
  if (const int d = code.minimum_weight(); d != 8)
    throw CodeConstructionError("Golay self-check: minimum weight " + std::to_string(d) + ", expected 8");
  const auto cols = mog_columns();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!code.contains(cols[i] + cols[j]))
        throw CodeConstructionError("Golay self-check: MOG columns do not form a sextet");
  for (auto octad : column_pair_octads())
    if (!code.contains(octad)) throw CodeConstructionError("Golay self-check: column-pair octad missing");
  return code;
}

LinearCode mog_golay() {
  static const LinearCode code = checked_golay(generator_words());
  return code;
}

LinearCode vanishing_subcode(const LinearCode& code, std::span<const int> positions) {
  const Codeword mask = Codeword::from_positions(positions);
  // Kernel of the restriction map to `positions`, by elimination on the
  // restricted bits.
  std::vector<std::uint32_t> rows;
  for (auto g : code.generators()) rows.push_back(g.bits());
  std::vector<std::uint32_t> kept;
  std::vector<std::uint32_t> pivots;  // rows with a nonzero restriction
  for (std::uint32_t r : rows) {
    for (std::uint32_t p : pivots) {
      const std::uint32_t lead = (p & mask.bits()) & -(p & mask.bits());
      if (r & lead) r ^= p;
    }
    if ((r & mask.bits()) == 0) {
      kept.push_back(r);
    } else {
      const std::uint32_t lead = (r & mask.bits()) & -(r & mask.bits());
      for (auto& p : pivots)
        if (p & lead) p ^= r;
      pivots.push_back(r);
    }
  }
  std::vector<Codeword> words;
  for (auto k : kept) words.emplace_back(k);
  return LinearCode(words);
}

LinearCode image_one_minus_perm(const LinearCode& code, const CoordPerm& p) {
  if (!code.is_automorphism(p)) throw std::invalid_argument("image_one_minus_perm: not a code automorphism");
  std::vector<Codeword> words;
  for (auto g : code.generators()) words.push_back(g + apply(p, g));
  return LinearCode(words);
}

bool is_subcode(const LinearCode& sub, const LinearCode& code) {
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Codeword w) { return code.contains(w); });
}

}  // namespace leechorb
