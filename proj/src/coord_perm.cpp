#include "leechorb/coord_perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace leechorb {

CoordPerm::CoordPerm() {
  for (int i = 0; i < kLength; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

CoordPerm CoordPerm::from_images(const std::array<int, kLength>& images) {
  CoordPerm p;
  std::array<bool, kLength> seen{};
  for (int i = 0; i < kLength; ++i) {
    const int img = images[i];
    if (img < 1 || img > kLength || seen[img - 1])
      throw std::invalid_argument("CoordPerm: images are not a permutation of 1..24");
    seen[img - 1] = true;
    p.images_[i] = static_cast<std::uint8_t>(img - 1);
  }
  return p;
}

CoordPerm CoordPerm::from_cycles(const std::string& text) {
  std::array<int, kLength> images{};
  std::iota(images.begin(), images.end(), 1);
  std::array<bool, kLength> used{};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in '" + text + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t used_chars = 0;
      int pos = 0;
      try {
        pos = std::stoi(text.substr(i), &used_chars);
      } catch (const std::exception&) {
        throw std::invalid_argument("cycle notation: bad position in '" + text + "'");
      }
      if (pos < 1 || pos > kLength || used[pos - 1])
        throw std::invalid_argument("cycle notation: position out of range or repeated");
      used[pos - 1] = true;
      cycle.push_back(pos);
      i += used_chars;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return from_images(images);
}

CoordPerm operator*(const CoordPerm& p, const CoordPerm& q) {
  CoordPerm r;
  for (int i = 0; i < kLength; ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

CoordPerm CoordPerm::inverse() const {
  CoordPerm r;
  for (int i = 0; i < kLength; ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

CoordPerm CoordPerm::pow(long exponent) const {
  const long n = order();
  long e = ((exponent % n) + n) % n;
  CoordPerm result;
  CoordPerm base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int CoordPerm::order() const {
  int ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

bool CoordPerm::is_identity() const { return *this == CoordPerm{}; }

std::vector<int> CoordPerm::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < kLength; ++i)
    if (images_[i] == i) out.push_back(i + 1);
  return out;
}

std::vector<std::vector<int>> CoordPerm::orbits() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kLength> seen{};
  for (int i = 0; i < kLength; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      orbit.push_back(j + 1);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<int>> CoordPerm::cycles() const {
  auto all = orbits();
  std::erase_if(all, [](const auto& c) { return c.size() < 2; });
  return all;
}

std::string CoordPerm::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

std::uint32_t CoordPerm::permute_bits(std::uint32_t bits) const {
  std::uint32_t out = 0;
  for (int i = 0; i < kLength; ++i)
    if (bits >> i & 1u) out |= 1u << images_[i];
  return out;
}

}  // namespace leechorb
