#include "leechorb/fixtures.hpp"
#include "leechorb/golay.hpp"
#include "leechorb/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <thread>

using namespace leechorb;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  bool json = false;
  bool long_checks = false;
  std::string fixtures;
  unsigned threads = 1;
};

VerifyOptions to_options(const Flags& f) {
  VerifyOptions o;
  if (!f.fixtures.empty()) o.fixtures = f.fixtures;
  o.long_checks = f.long_checks;
  o.threads = f.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : f.threads;
  return o;
}

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_flag("--json", flags.json, "machine-readable JSON report");
  cmd->add_option("--fixtures", flags.fixtures, "directory overriding the built-in fixtures");
  cmd->add_flag("--long", flags.long_checks, "enable expensive checks (norm-4 count of Leech)");
  cmd->add_option("--threads", flags.threads, "worker threads for enumeration (0 = all cores)");
}

int run_verify(Suite suite, const Flags& flags) {
  const auto report = run_suite(suite, to_options(flags));
  if (flags.json)
    std::cout << report.to_json().dump(2) << '\n';
  else
    std::cout << report.to_text();
  return report.passed() ? 0 : kExitFail;
}

struct EnumerateArgs {
  std::string lattice;
  std::string basis;
  std::string offset;
  std::string target;
};

int run_enumerate(const EnumerateArgs& args, const Flags& flags) {
  const auto opts = to_options(flags);
  if (args.lattice.empty() == args.basis.empty())
    throw CLI::ValidationError("enumerate", "give exactly one of --lattice and --basis");
  const Rational target = parse_rational(args.target);
  if (target < 0) throw CLI::ValidationError("--target", "must be non-negative");

  IntegralLattice lattice =
      args.lattice.empty() ? reduce_basis(lattice_from_generators(read_vectors(args.basis)))
                           : named_lattice(args.lattice, opts);
  LatticeVector offset;
  if (!args.offset.empty()) {
    std::filesystem::path p = args.offset;
    if (!std::filesystem::exists(p) && opts.fixtures) p = *opts.fixtures / args.offset;
    if (!std::filesystem::exists(p) && std::filesystem::exists(std::filesystem::path(LEECHORB_FIXTURE_DIR) / args.offset))
      p = std::filesystem::path(LEECHORB_FIXTURE_DIR) / args.offset;
    const auto vs = read_vectors(p);
    if (vs.size() != 1) throw FixtureError(p.string() + ": expected exactly one offset vector");
    offset = vs.front();
  }
  const auto points = enumerate_norm(lattice, offset, target, {opts.threads});
  if (flags.json) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = "enumerate";
    j["target"] = to_string(target);
    j["count"] = points.size();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : points) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int i = 0; i < kLength; ++i) row.push_back(v[i]);
      arr.push_back(std::move(row));
    }
    j["vectors"] = std::move(arr);
    std::cout << j.dump(2) << '\n';
  } else {
    write_vectors(std::cout, points);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Golay code, Leech lattice and Z7 orbifold weight-one data"};
  app.set_version_flag("--version", std::string(kToolName) + ' ' + kToolVersion);
  app.require_subcommand(1);

  Flags flags;
  const std::map<std::string, std::pair<Suite, std::string>> suites = {
      {"verify-golay", {Suite::Golay, "Golay code parameters"}},
      {"verify-tau", {Suite::Tau, "order-7 isometry search and invariants"}},
      {"verify-lattice", {Suite::Lattice, "Leech lattice unimodularity, evenness, no roots"}},
      {"verify-lemmas", {Suite::Lemmas, "code and lattice image identities, projection basis"}},
      {"verify-orbifold", {Suite::Orbifold, "twisted sectors, weight-one space, A6 at level 7"}},
      {"verify-all", {Suite::All, "every check"}},
  };
  std::map<CLI::App*, Suite> by_cmd;
  for (const auto& [name, entry] : suites) {
    auto* cmd = app.add_subcommand(name, entry.second);
    add_common(cmd, flags);
    by_cmd[cmd] = entry.first;
  }

  EnumerateArgs eargs;
  auto* en = app.add_subcommand("enumerate", "list x + offset with x in the lattice and |x + offset|^2 = target");
  add_common(en, flags);
  en->add_option("--lattice", eargs.lattice, "leech, p0leech, fixed or m");
  en->add_option("--basis", eargs.basis, "file with basis or generator vectors");
  en->add_option("--offset", eargs.offset, "file with one offset vector (looked up in the fixture dir too)");
  en->add_option("--target", eargs.target, "target norm as p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (en->parsed()) return run_enumerate(eargs, flags);
    for (const auto& [cmd, suite] : by_cmd)
      if (cmd->parsed()) return run_verify(suite, flags);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CodeConstructionError& e) {
    std::cerr << "fixture error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
