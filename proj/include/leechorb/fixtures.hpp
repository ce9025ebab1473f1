#pragma once

// Plain-text fixture formats.
//
//   *.vec  one vector per line, 24 space-separated integers (coordinates at
//          scale 1/(7 sqrt 8)); '#' starts a comment; blank lines ignored.
//   *.gen  one codeword per line, 24 characters '0'/'1'; same comment rules.

#include "leechorb/golay.hpp"
#include "leechorb/leech.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace leechorb {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<LatticeVector> parse_vectors(std::istream& in);
std::vector<Codeword> parse_codewords(std::istream& in);

/// Throw FixtureError when the file is missing or malformed.
std::vector<LatticeVector> read_vectors(const std::filesystem::path& path);
std::vector<Codeword> read_codewords(const std::filesystem::path& path);

void write_vectors(std::ostream& out, const std::vector<LatticeVector>& vs);

}  // namespace leechorb
