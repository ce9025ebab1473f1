#include "leechorb/verify.hpp"

#include "leechorb/fixtures.hpp"
#include "leechorb/isometry.hpp"
#include "leechorb/orbifold.hpp"
#include "leechorb/root_system.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

namespace leechorb {

using nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(Status::Fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

ordered_json VerificationReport::to_json() const {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["configuration"] = configuration;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["claim"] = c.claim;
    e["status"] = to_string(c.status);
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["notes"] = notes;
  j["summary"] = {{"passed", count(Status::Pass)},
                  {"failed", count(Status::Fail)},
                  {"skipped", count(Status::Skip)},
                  {"status", passed() ? "pass" : "fail"}};
  if (!conclusion.empty()) j["conclusion"] = conclusion;
  return j;
}

namespace {

std::string compact(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << kToolName << ' ' << kToolVersion << "  " << command << '\n';
  for (const auto& [key, value] : configuration.items()) os << "  " << key << ": " << compact(value) << '\n';
  for (const auto& c : checks) {
    const char* tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    os << '[' << tag << "] " << c.name << ": " << compact(c.computed);
    if (c.status != Status::Pass) os << " (expected " << compact(c.expected) << ')';
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << '\n';
  }
  for (const auto& [key, value] : notes.items()) os << "note " << key << ": " << compact(value) << '\n';
  os << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Skip)
     << " skipped\n";
  if (!conclusion.empty()) os << conclusion << '\n';
  return os.str();
}

std::string generator_fingerprint(const LinearCode& code) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto g : code.generators())
    for (int byte = 0; byte < 3; ++byte) {
      h ^= (g.bits() >> (8 * byte)) & 0xFFu;
      h *= 0x100000001b3ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

InputData load_inputs(const VerifyOptions& opts) {
  InputData in{mog_golay(), reference_projection_basis(), reference_f(), reference_betas()};
  if (!opts.fixtures) return in;
  const auto& dir = *opts.fixtures;
  if (!std::filesystem::is_directory(dir)) throw FixtureError("fixture directory not found: " + dir.string());
  if (auto p = dir / "golay.gen"; std::filesystem::exists(p)) {
    const auto words = read_codewords(p);
    if (words.size() != 12) throw FixtureError(p.string() + ": expected 12 generator lines");
    in.code = checked_golay(words);
  }
  if (auto p = dir / "lemma34.vec"; std::filesystem::exists(p)) {
    in.projection_basis = read_vectors(p);
    if (in.projection_basis.size() != 6) throw FixtureError(p.string() + ": expected 6 vectors");
  }
  if (auto p = dir / "f.vec"; std::filesystem::exists(p)) {
    const auto vs = read_vectors(p);
    if (vs.size() != 1) throw FixtureError(p.string() + ": expected exactly one vector");
    in.f = vs.front();
  }
  if (auto p = dir / "lemma35_s1.vec"; std::filesystem::exists(p)) {
    in.betas = read_vectors(p);
    if (in.betas.size() != 7) throw FixtureError(p.string() + ": expected 7 vectors");
  }
  return in;
}

namespace {

ordered_json vec_json(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < kLength; ++i) a.push_back(v[i]);
  return a;
}

ordered_json vecs_json(const std::vector<LatticeVector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

ordered_json q(const Rational& r) { return to_string(r); }

std::vector<LatticeVector> sorted(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<LatticeVector> negated(const std::vector<LatticeVector>& v) {
  std::vector<LatticeVector> out;
  for (const auto& x : v) out.push_back(-x);
  return sorted(out);
}

// Lazily computed objects shared by the checks of one run.
class Context {
 public:
  explicit Context(const VerifyOptions& opts) : opts_(opts), in_(load_inputs(opts)) {}

  const VerifyOptions& options() const { return opts_; }
  const InputData& input() const { return in_; }
  EnumerationOptions enum_opts() const { return {opts_.threads}; }

  const CoordPerm& tau() {
    if (!tau_) tau_ = find_tau(in_.code);
    return *tau_;
  }
  const IntegralLattice& leech() {
    if (!leech_) leech_ = leech_lattice(in_.code);
    return *leech_;
  }
  const IntegralLattice& leech_reduced() {
    if (!leech_reduced_) leech_reduced_ = reduce_basis(leech());
    return *leech_reduced_;
  }
  const IntegralLattice& fixed() {
    if (!fixed_) fixed_ = fixed_sublattice(leech(), tau());
    return *fixed_;
  }
  const IntegralLattice& projected() {
    if (!projected_) projected_ = reduce_basis(projection_lattice(leech(), tau()));
    return *projected_;
  }
  const IntegralLattice& orthogonal() {
    if (!orthogonal_) orthogonal_ = orthogonal_sublattice(leech(), fixed());
    return *orthogonal_;
  }
  const std::vector<LatticeVector>& sector(int r) {
    auto it = sectors_.find(r);
    if (it == sectors_.end()) it = sectors_.emplace(r, weight_one_sector_basis(projected(), r, in_.f, enum_opts())).first;
    return it->second;
  }
  const std::vector<LatticeVector>& leech_norm2() {
    if (!norm2_) norm2_ = enumerate_norm(leech_reduced(), LatticeVector{}, Rational(2), enum_opts());
    return *norm2_;
  }

 private:
  VerifyOptions opts_;
  InputData in_;
  std::optional<CoordPerm> tau_;
  std::optional<IntegralLattice> leech_, leech_reduced_, fixed_, projected_, orthogonal_;
  std::map<int, std::vector<LatticeVector>> sectors_;
  std::optional<std::vector<LatticeVector>> norm2_;
};

struct Outcome {
  ordered_json computed;
  ordered_json expected;
  bool ok = false;
  std::string detail = {};
};

class Runner {
 public:
  Runner(Context& ctx, VerificationReport& rep) : ctx_(ctx), rep_(rep) {}

  void check(const std::string& name, const std::string& claim, const std::function<Outcome(Context&)>& body) {
    Check c{name, claim, Status::Fail, nullptr, nullptr, {}};
    try {
      Outcome o = body(ctx_);
      c.computed = std::move(o.computed);
      c.expected = std::move(o.expected);
      c.status = o.ok ? Status::Pass : Status::Fail;
      c.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      c.status = Status::Fail;
      c.detail = e.what();
    }
    rep_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& claim, ordered_json expected, const std::string& why) {
    rep_.checks.push_back({name, claim, Status::Skip, nullptr, std::move(expected), why});
  }

  template <class T>
  static Outcome equal(T computed, T expected) {
    Outcome o{computed, expected, computed == expected};
    return o;
  }

 private:
  Context& ctx_;
  VerificationReport& rep_;
};

// ---------------------------------------------------------------------------

void golay_checks(Runner& run) {
  run.check("golay_dimension", "the code has dimension 12",
            [](Context& c) { return Runner::equal<std::size_t>(c.input().code.dimension(), 12); });
  run.check("golay_minimum_weight", "minimum nonzero weight over all 4096 codewords is 8",
            [](Context& c) { return Runner::equal(c.input().code.minimum_weight(), 8); });
  run.check("weight_distribution", "weight distribution over all 4096 codewords", [](Context& c) {
    ordered_json got = ordered_json::object();
    for (const auto& [w, n] : c.input().code.weight_distribution()) got[std::to_string(w)] = n;
    const ordered_json want = {{"0", 1}, {"8", 759}, {"12", 2576}, {"16", 759}, {"24", 1}};
    return Outcome{got, want, got == want};
  });
  run.check("golay_self_dual", "the code equals its dual",
            [](Context& c) { return Runner::equal(c.input().code.is_self_dual(), true); });
  run.check("golay_doubly_even", "every codeword weight is divisible by 4", [](Context& c) {
    bool ok = true;
    for (const auto& [w, n] : c.input().code.weight_distribution()) ok = ok && w % 4 == 0;
    return Runner::equal(ok, true);
  });
  run.check("golay_sextet_columns", "any two MOG columns sum to a codeword", [](Context& c) {
    const auto cols = mog_columns();
    int hits = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) hits += c.input().code.contains(cols[i] + cols[j]);
    return Runner::equal(hits, 15);
  });
  run.check("golay_column_pair_octads", "the three column-pair octads E1, E2, E3 are codewords", [](Context& c) {
    int hits = 0;
    for (auto o : column_pair_octads()) hits += c.input().code.contains(o);
    return Runner::equal(hits, 3);
  });
}

void tau_checks(Runner& run) {
  run.check("tau_found", "an order-7 code automorphism fixing 1, 9, 17 exists",
            [](Context& c) { return Outcome{c.tau().to_cycle_string(), "seven-cycles on the three bricks", true}; });
  run.check("tau_order", "tau has order 7", [](Context& c) { return Runner::equal(c.tau().order(), 7); });
  run.check("tau_trace", "the trace of tau is 3", [](Context& c) { return Runner::equal(trace(c.tau()), 3); });
  run.check("tau_fixed_positions", "tau fixes exactly positions 1, 9, 17",
            [](Context& c) { return Runner::equal(c.tau().fixed_points(), std::vector<int>{1, 9, 17}); });
  run.check("tau_preserves_code", "tau maps the code onto itself",
            [](Context& c) { return Runner::equal(c.input().code.is_automorphism(c.tau()), true); });
  run.check("tau_preserves_leech", "tau maps every Leech basis vector into the Leech lattice",
            [](Context& c) { return Runner::equal(preserves(c.leech(), c.tau()), true); });
  run.check("tau_eigen_multiplicities", "eigenvalue multiplicities of tau",
            [](Context& c) { return Runner::equal(eigen_multiplicities(c.tau(), 7), std::vector<int>{6, 3, 3, 3, 3, 3, 3}); });
  run.check("fixed_sublattice_rank", "the tau-fixed sublattice has rank 6",
            [](Context& c) { return Runner::equal<std::size_t>(c.fixed().rank(), 6); });
  run.check("fixed_and_orthogonal_ranks", "rank(fixed) + rank(orthogonal complement in Leech) = 24",
            [](Context& c) { return Runner::equal<std::size_t>(c.fixed().rank() + c.orthogonal().rank(), 24); });
}

void lattice_checks(Runner& run, bool long_checks) {
  run.check("leech_rank", "the generated lattice has rank 24",
            [](Context& c) { return Runner::equal<std::size_t>(c.leech().rank(), 24); });
  run.check("leech_unimodular", "the Gram determinant is 1",
            [](Context& c) { return Outcome{q(det_gram(c.leech())), "1", det_gram(c.leech()) == 1}; });
  run.check("leech_even", "all norms even and all inner products integral",
            [](Context& c) { return Runner::equal(is_even(c.leech()), true); });
  run.check("leech_no_norm2_vectors", "complete enumeration finds no vectors of norm 2",
            [](Context& c) { return Runner::equal<std::size_t>(c.leech_norm2().size(), 0); });
  if (long_checks)
    run.check("leech_norm4_count", "number of norm-4 vectors", [](Context& c) {
      return Runner::equal<std::size_t>(count_norm(c.leech_reduced(), LatticeVector{}, Rational(4), c.enum_opts()),
                                        196560);
    });
  else
    run.skip("leech_norm4_count", "number of norm-4 vectors", 196560, "expensive; enable with --long");
}

void lemma_checks(Runner& run) {
  run.check("golay_vanishing_subcode_dimension", "codewords vanishing at 1, 9, 17 form a 9-dimensional subcode",
            [](Context& c) {
              const std::vector<int> pos = {1, 9, 17};
              return Runner::equal<std::size_t>(vanishing_subcode(c.input().code, pos).dimension(), 9);
            });
  for (int r = 1; r <= 6; ++r) {
    run.check("golay_one_minus_tau_r" + std::to_string(r),
              "(1 - tau^" + std::to_string(r) + ") G equals the vanishing subcode G0", [r](Context& c) {
                const std::vector<int> pos = {1, 9, 17};
                const auto g0 = vanishing_subcode(c.input().code, pos);
                const auto img = image_one_minus_perm(c.input().code, c.tau().pow(r));
                ordered_json got = {{"dimension", img.dimension()}, {"contained", is_subcode(img, g0)},
                                    {"equal", img == g0}};
                ordered_json want = {{"dimension", 9}, {"contained", true}, {"equal", true}};
                return Outcome{got, want, got == want};
              });
  }
  run.check("orthogonal_sublattice_rank", "M = Leech vectors orthogonal to the fixed space has rank 18",
            [](Context& c) { return Runner::equal<std::size_t>(c.orthogonal().rank(), 18); });
  for (int r = 1; r <= 6; ++r) {
    run.check("m_equals_one_minus_tau_r" + std::to_string(r),
              "M equals (1 - tau^" + std::to_string(r) + ") Leech", [r](Context& c) {
                const auto img = one_minus_power_image(c.leech(), c.tau(), r);
                ordered_json got = {{"contained", is_sublattice(img, c.orthogonal())}, {"equal", img == c.orthogonal()}};
                ordered_json want = {{"contained", true}, {"equal", true}};
                return Outcome{got, want, got == want};
              });
  }
  run.check("projection_basis_members", "the six printed vectors lie in P0(Leech)", [](Context& c) {
    int hits = 0;
    for (const auto& v : c.input().projection_basis) hits += contains(c.projected(), v);
    return Runner::equal(hits, 6);
  });
  run.check("projection_basis_spans", "the six printed vectors span P0(Leech)", [](Context& c) {
    const auto printed = lattice_from_generators(c.input().projection_basis);
    Outcome o{printed.rank(), 6, printed == c.projected()};
    if (!o.ok) o.detail = "HNF of the printed vectors differs from the computed projection lattice";
    return o;
  });
}

void orbifold_checks(Runner& run, VerificationReport& rep) {
  run.check("f_norm", "(f|f) = 2/7",
            [](Context& c) { return Outcome{q(norm(c.input().f)), "2/7", norm(c.input().f) == Rational(2, 7)}; });
  run.check("f_tau_fixed", "tau f = f",
            [](Context& c) { return Runner::equal(apply(c.tau(), c.input().f) == c.input().f, true); });
  run.check("f_not_in_projection", "f is not in P0(Leech)",
            [](Context& c) { return Runner::equal(contains(c.projected(), c.input().f), false); });
  run.check("seven_f_in_leech", "7f lies in Leech and f does not",
            [](Context& c) {
              ordered_json got = {{"7f", contains(c.leech(), 7 * c.input().f)}, {"f", contains(c.leech(), c.input().f)}};
              ordered_json want = {{"7f", true}, {"f", false}};
              return Outcome{got, want, got == want};
            });
  run.check("g_order_seven", "g = sigma_f tau has order 7 on lattice data", [](Context& c) {
    const auto g = verify_g_order(c.input().f, c.tau(), c.leech());
    ordered_json got = {{"order_seven", g.order_seven}, {"degenerate", g.degenerate}};
    ordered_json want = {{"order_seven", true}, {"degenerate", false}};
    return Outcome{got, want, got == want};
  });
  run.check("vacuum_weight_trace3", "twisted vacuum weight for multiplicities (6,3,3,3,3,3,3)", [](Context&) {
    const auto rho = twisted_vacuum_weight({6, 3, 3, 3, 3, 3, 3});
    return Outcome{q(rho), "6/7", rho == Rational(6, 7)};
  });
  run.check("vacuum_weight_fixed_point_free", "twisted vacuum weight for multiplicities (0,4,4,4,4,4,4)",
            [](Context&) {
              const auto rho = twisted_vacuum_weight({0, 4, 4, 4, 4, 4, 4});
              return Outcome{q(rho), "8/7", rho == Rational(8, 7)};
            });
  for (int r : kSectors) {
    run.check("sector_size_r" + std::string(r > 0 ? "+" : "") + std::to_string(r),
              "|S^r| = 7 for r = " + std::to_string(r), [r](Context& c) {
                const auto& s = c.sector(r);
                bool norms = std::all_of(s.begin(), s.end(), [](const LatticeVector& v) { return norm(v) == Rational(2, 7); });
                ordered_json got = {{"size", s.size()}, {"all_norm_2/7", norms}};
                ordered_json want = {{"size", 7}, {"all_norm_2/7", true}};
                return Outcome{got, want, got == want};
              });
  }
  run.check("s1_matches_printed_betas", "S^1 equals the seven printed beta vectors", [](Context& c) {
    const auto got = c.sector(1);
    const auto want = sorted(c.input().betas);
    Outcome o{vecs_json(got), vecs_json(want), got == want};
    if (!o.ok) o.detail = "enumerated S^1 differs from the printed vectors";
    return o;
  });
  run.check("sectors_negation_symmetric", "S^-r = -S^r for r = 1, 2, 3", [](Context& c) {
    int hits = 0;
    for (int r = 1; r <= 3; ++r) hits += c.sector(-r) == negated(c.sector(r));
    return Runner::equal(hits, 3);
  });
  run.check("beta_cyclic_order", "the enumerated S^1 ordered from f reproduces the printed labels", [](Context& c) {
    const auto betas = cyclic_beta_order(c.sector(1), c.input().f);
    return Outcome{vecs_json(betas), vecs_json(c.input().betas), betas == c.input().betas};
  });
  run.check("s2_consecutive_pairs", "S^2 = {beta_i + beta_(i+1)}", [](Context& c) {
    return Runner::equal(c.sector(2) == sorted(consecutive_sums(c.input().betas, 2)), true);
  });
  run.check("s3_consecutive_triples", "S^3 = {beta_i + beta_(i+1) + beta_(i+2)}", [](Context& c) {
    return Runner::equal(c.sector(3) == sorted(consecutive_sums(c.input().betas, 3)), true);
  });
  run.check("beta_gram_relation", "(beta_i|beta_j) = 2/7, -1/7 for cyclic neighbours, 0 otherwise", [](Context& c) {
    const auto& b = c.input().betas;
    ordered_json g = ordered_json::array();
    bool ok = b.size() == 7;
    for (std::size_t i = 0; i < b.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < b.size(); ++j) {
        const auto d = (i + 7 - j) % 7;
        const Rational want = i == j ? Rational(2, 7) : (d == 1 || d == 6) ? Rational(-1, 7) : Rational(0);
        const Rational got = inner(b[i], b[j]);
        ok = ok && got == want;
        row.push_back(q(got));
      }
      g.push_back(std::move(row));
    }
    return Outcome{g, "cyclic A6 weight pattern", ok};
  });
  run.check("beta_sum_zero", "beta_0 + ... + beta_6 = 0", [](Context& c) {
    LatticeVector s;
    for (const auto& b : c.input().betas) s = s + b;
    return Outcome{vec_json(s), vec_json(LatticeVector{}), s.is_zero()};
  });
  for (int r : kSectors) {
    run.check("min_coset_norm_r" + std::string(r > 0 ? "+" : "") + std::to_string(r),
              "min |x + rf|^2 over P0(Leech) is 2/7, so the lowest weight is 1", [r](Context& c) {
                const auto m = min_coset_norm(c.projected(), r * c.input().f, c.enum_opts());
                const Rational lowest = m / 2 + twisted_vacuum_weight({6, 3, 3, 3, 3, 3, 3});
                ordered_json got = {{"min_norm", q(m)}, {"lowest_weight", q(lowest)}};
                ordered_json want = {{"min_norm", "2/7"}, {"lowest_weight", "1"}};
                return Outcome{got, want, got == want};
              });
  }
  run.check("weight_one_dimension", "dim of the weight-one space = 6 + 6 x 7 = 48", [](Context& c) {
    if (!c.leech_norm2().empty()) throw std::runtime_error("Leech lattice has norm-2 vectors");
    std::vector<TwistSector> sectors;
    for (int r : kSectors) sectors.push_back({r, c.input().f, Rational(6, 7), c.sector(r)});
    const auto rep = assemble_weight_one(sectors, static_cast<int>(c.fixed().rank()));
    ordered_json dims = ordered_json::object();
    for (const auto& [r, d] : rep.sector_dims) dims[std::to_string(r)] = d;
    ordered_json got = {{"cartan", rep.cartan_dim}, {"sectors", dims}, {"total", rep.total_dim}};
    return Outcome{got, 48, rep.total_dim == 48 && rep.cartan_dim == 6};
  });
  run.check("root_system_type", "the 42 weights form a root system of type A6", [](Context& c) {
    std::vector<LatticeVector> roots;
    for (int r : kSectors) roots.insert(roots.end(), c.sector(r).begin(), c.sector(r).end());
    const auto rs = identify_root_system(roots);
    ordered_json cartan = ordered_json::array();
    for (std::size_t i = 0; i < rs.cartan_matrix.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < rs.cartan_matrix.cols(); ++j) row.push_back(rs.cartan_matrix(i, j));
      cartan.push_back(std::move(row));
    }
    Matrix<long> a6(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      a6(i, i) = 2;
      if (i + 1 < 6) a6(i, i + 1) = a6(i + 1, i) = -1;
    }
    ordered_json got = {{"type", rs.dynkin_type()}, {"roots", rs.roots.size()}, {"cartan_matrix", cartan}};
    Outcome o{got, {{"type", "A6"}, {"roots", 42}}, rs.dynkin_type() == "A6" && rs.roots.size() == 42 && rs.cartan_matrix == a6};
    return o;
  });
  run.check("level", "level 7 from h^vee/k = (dim V1 - 24)/24 and from 2/(alpha|alpha)", [](Context& c) {
    std::vector<LatticeVector> roots;
    for (int r : kSectors) roots.insert(roots.end(), c.sector(r).begin(), c.sector(r).end());
    const auto rs = identify_root_system(roots);
    const int dim = static_cast<int>(c.fixed().rank() + roots.size());
    if (rs.components.size() != 1) throw std::runtime_error("weight-one Lie algebra is not simple");
    const auto k_identity = level_from_identity(dim, rs.components.front());
    ordered_json got = {{"identity", q(k_identity)}, {"root_norm", q(rs.level)}};
    ordered_json want = {{"identity", "7"}, {"root_norm", "7"}};
    return Outcome{got, want, got == want};
  });

  rep.notes["weight_one_states"] = "each weight-one state e^a (x) t_r is recorded by its h_(0)-weight a + r f";
  rep.notes["beta_labels"] = "beta indexing anchors beta_1 = f and takes the orientation with the larger beta_2";
}

}  // namespace

VerificationReport run_suite(Suite suite, const VerifyOptions& opts) {
  VerificationReport rep;
  static const char* names[] = {"verify-golay", "verify-tau", "verify-lattice", "verify-lemmas", "verify-orbifold",
                                "verify-all"};
  rep.command = names[static_cast<int>(suite)];
  Context ctx(opts);
  rep.configuration["generator_fingerprint"] = generator_fingerprint(ctx.input().code);
  rep.configuration["fixtures"] = opts.fixtures ? opts.fixtures->string() : std::string("built-in");
  Runner run(ctx, rep);

  const bool all = suite == Suite::All;
  if (all || suite == Suite::Golay) golay_checks(run);
  if (all || suite != Suite::Golay) {
    try {
      rep.configuration["tau"] = ctx.tau().to_cycle_string();
    } catch (const std::exception& e) {
      rep.configuration["tau"] = std::string("not found: ") + e.what();
    }
  }
  if (all || suite == Suite::Tau) tau_checks(run);
  if (all || suite == Suite::Lattice) lattice_checks(run, opts.long_checks);
  if (all || suite == Suite::Lemmas) lemma_checks(run);
  if (all || suite == Suite::Orbifold) orbifold_checks(run, rep);

  if (all || suite == Suite::Tau) {
    try {
      rep.notes["projection_over_fixed_index"] = lattice_index(ctx.projected(), ctx.fixed()).get_str();
    } catch (const std::exception& e) {
      rep.notes["projection_over_fixed_index"] = std::string("unavailable: ") + e.what();
    }
  }
  if ((all || suite == Suite::Orbifold) && rep.passed())
    rep.conclusion = "48-dimensional weight-one Lie algebra of type A6 at level 7";
  return rep;
}

IntegralLattice named_lattice(const std::string& name, const VerifyOptions& opts) {
  Context ctx(opts);
  if (name == "leech") return ctx.leech_reduced();
  if (name == "p0leech") return ctx.projected();
  if (name == "fixed") return reduce_basis(ctx.fixed());
  if (name == "m") return reduce_basis(ctx.orthogonal());
  throw std::invalid_argument("unknown lattice '" + name + "' (expected leech, p0leech, fixed or m)");
}

}  // namespace leechorb
