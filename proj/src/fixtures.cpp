#include "leechorb/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace leechorb {

namespace {

// Strips comments and surrounding whitespace; returns false for blank lines.
bool content(std::string& line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return false;
  line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
  return true;
}

}  // namespace

std::vector<LatticeVector> parse_vectors(std::istream& in) {
  std::vector<LatticeVector> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content(line)) continue;
    std::istringstream ls(line);
    LatticeVector::Coords c{};
    int count = 0;
    std::string tok;
    while (ls >> tok) {
      if (count == kLength) throw FixtureError("line " + std::to_string(lineno) + ": more than 24 entries");
      try {
        std::size_t used = 0;
        c[count] = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw FixtureError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      }
      ++count;
    }
    if (count != kLength)
      throw FixtureError("line " + std::to_string(lineno) + ": expected 24 entries, got " + std::to_string(count));
    out.emplace_back(c);
  }
  return out;
}

std::vector<Codeword> parse_codewords(std::istream& in) {
  std::vector<Codeword> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content(line)) continue;
    try {
      out.push_back(Codeword::parse(line));
    } catch (const std::invalid_argument& e) {
      throw FixtureError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace {

template <class F>
auto read_file(const std::filesystem::path& path, F parse) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path.string());
  try {
    return parse(in);
  } catch (const FixtureError& e) {
    throw FixtureError(path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<LatticeVector> read_vectors(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return parse_vectors(in); });
}

std::vector<Codeword> read_codewords(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return parse_codewords(in); });
}

void write_vectors(std::ostream& out, const std::vector<LatticeVector>& vs) {
  for (const auto& v : vs) out << v.to_string() << '\n';
}

}  // namespace leechorb
