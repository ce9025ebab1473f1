#pragma once

// Verification suites behind the command-line tool.  Each suite produces an
// ordered list of named checks with computed and expected values.

#include "leechorb/coord_perm.hpp"
#include "leechorb/golay.hpp"
#include "leechorb/leech.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace leechorb {

inline constexpr const char* kToolName = "leechorb";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct Check {
  std::string name;   // stable identifier, e.g. "leech_no_norm2_vectors"
  std::string claim;  // what is being verified, in words
  Status status = Status::Skip;
  nlohmann::ordered_json computed;
  nlohmann::ordered_json expected;
  std::string detail;  // failure diagnostics or skip reason
};

struct VerificationReport {
  std::string command;
  nlohmann::ordered_json configuration = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  std::string conclusion;  // set when the orbifold checks all pass

  bool passed() const;
  std::size_t count(Status s) const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

enum class Suite { Golay, Tau, Lattice, Lemmas, Orbifold, All };

struct VerifyOptions {
  /// Directory with golay.gen, lemma34.vec, f.vec, lemma35_s1.vec; any file
  /// present overrides the built-in data.
  std::optional<std::filesystem::path> fixtures;
  bool long_checks = false;
  unsigned threads = 1;
};

/// Input data after applying fixture overrides.  Throws FixtureError or
/// CodeConstructionError for unusable fixtures.
struct InputData {
  LinearCode code;
  std::vector<LatticeVector> projection_basis;
  LatticeVector f;
  std::vector<LatticeVector> betas;
};
InputData load_inputs(const VerifyOptions& opts);

/// 64-bit FNV-1a over the canonical generator words, as 16 hex digits.
std::string generator_fingerprint(const LinearCode& code);

VerificationReport run_suite(Suite suite, const VerifyOptions& opts);

/// Named lattices for the enumerate command: leech, p0leech, fixed, m.
IntegralLattice named_lattice(const std::string& name, const VerifyOptions& opts);

}  // namespace leechorb
