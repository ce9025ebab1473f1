// One line per acceptance criterion; exit status 1 if any fails.
// Pass --long to include the norm-4 count of the Leech lattice.

#include "properties.hpp"
#include "support.hpp"

#include "leechorb/root_system.hpp"

#include <bit>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

using namespace leechorb;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok;
  std::string detail;
};

int failures = 0;

// Runs one criterion.  limit_s <= 0 means no runtime limit.
void criterion(int id, const std::string& title, double limit_s, const std::function<Result()>& body) {
  const auto start = Clock::now();
  Result r{false, {}};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    r.ok = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
  }
  if (!r.ok) ++failures;
  std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ["
            << std::fixed << std::setprecision(3) << secs << " s";
  if (limit_s > 0) std::cout << " / limit " << limit_s << " s";
  std::cout << "]";
  if (!r.detail.empty()) std::cout << "  " << r.detail;
  std::cout << std::endl;
}

std::vector<LatticeVector> sorted(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_checks = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_checks = true;

  const LinearCode code = mog_golay();

  criterion(1, "Golay code: dimension 12, minimum weight 8, weight distribution (1, 759, 2576, 759, 1)", 1.0, [&] {
    // oracle: XOR all 4096 subsets of the generators directly
    const auto gens = mog_golay_generators();
    std::map<int, std::size_t> dist;
    for (std::uint32_t mask = 0; mask < 4096; ++mask) {
      std::uint32_t w = 0;
      for (int i = 0; i < 12; ++i)
        if (mask >> i & 1u) w ^= gens[static_cast<std::size_t>(i)].bits();
      ++dist[std::popcount(w)];
    }
    const std::map<int, std::size_t> want = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    BitMatrix bm{24, {}};
    for (auto g : gens) bm.rows.push_back(g.bits());
    const bool ok = gf2_rank(bm) == 12 && code.dimension() == 12 && code.minimum_weight() == 8 &&
                    code.weight_distribution() == want && dist == want;
    return Result{ok, {}};
  });

  std::optional<CoordPerm> tau;
  std::optional<IntegralLattice> leech, fixed;
  criterion(2, "tau: order 7, 3 fixed coordinates, preserves the code and Leech; fixed sublattice rank 6", 5.0, [&] {
    tau = find_tau(code);
    leech = leech_lattice(code);
    fixed = fixed_sublattice(*leech, *tau);
    const bool ok = tau->order() == 7 && tau->fixed_points().size() == 3 && trace(*tau) == 3 &&
                    code.is_automorphism(*tau) && preserves(*leech, *tau) && fixed->rank() == 6;
    return Result{ok, tau->to_cycle_string()};
  });
  if (!tau) {
    std::cout << "cannot continue without tau\n";
    return 1;
  }

  criterion(3, "(1 - tau^r) G = G0 with dim G0 = 9 for r = 1..6", 0, [&] {
    const std::vector<int> pos = {1, 9, 17};
    const LinearCode g0 = vanishing_subcode(code, pos);
    bool ok = g0.dimension() == 9;
    for (int r = 1; r <= 6; ++r) {
      const LinearCode img = image_one_minus_perm(code, tau->pow(r));
      ok = ok && is_subcode(img, g0) && img == g0;
    }
    return Result{ok, {}};
  });

  const IntegralLattice m = orthogonal_sublattice(*leech, *fixed);
  criterion(4, "M = (1 - tau^r) Leech for r = 1..6 (HNF equality)", 0, [&] {
    bool ok = m.rank() == 18;
    for (int r = 1; r <= 6; ++r) {
      const auto img = one_minus_power_image(*leech, *tau, r);
      ok = ok && is_sublattice(img, m) && img == m;
    }
    return Result{ok, {}};
  });

  const IntegralLattice projected = reduce_basis(projection_lattice(*leech, *tau));
  criterion(5, "the six printed vectors lie in P0(Leech) and span it", 0, [&] {
    bool ok = true;
    for (const auto& v : reference_projection_basis()) ok = ok && contains(projected, v);
    ok = ok && lattice_from_generators(reference_projection_basis()) == projected;
    return Result{ok, {}};
  });

  const LatticeVector f = reference_f();
  criterion(6, "f: (f|f) = 2/7, tau f = f, f not in P0(Leech), 7f in Leech", 0, [&] {
    const bool ok = inner(f, f) == Rational(2, 7) && apply(*tau, f) == f && !contains(projected, f) &&
                    contains(*leech, 7 * f);
    return Result{ok, {}};
  });

  std::map<int, std::vector<LatticeVector>> sectors;
  criterion(7, "|S^r| = 7 for r = +-1, +-2, +-3; S^1 = printed betas; S^-r = -S^r; S^2, S^3 consecutive sums", 1.0, [&] {
    for (int r : kSectors) sectors[r] = weight_one_sector_basis(projected, r, f);
    const auto betas = reference_betas();
    bool ok = true;
    for (int r : kSectors) ok = ok && sectors[r].size() == 7;
    ok = ok && sectors[1] == sorted(betas);
    for (int r = 1; r <= 3; ++r) {
      std::vector<LatticeVector> neg;
      for (const auto& v : sectors[r]) neg.push_back(-v);
      ok = ok && sectors[-r] == sorted(neg);
    }
    ok = ok && sectors[2] == sorted(consecutive_sums(betas, 2)) && sectors[3] == sorted(consecutive_sums(betas, 3));
    return Result{ok, {}};
  });

  criterion(8, "Gram relation (beta_i|beta_j) = 2/7, -1/7 (i - j = +-1 mod 7), 0 otherwise", 0, [&] {
    const auto b = reference_betas();
    bool ok = b.size() == 7;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        const int d = ((i - j) % 7 + 7) % 7;
        const Rational want = i == j ? Rational(2, 7) : (d == 1 || d == 6) ? Rational(-1, 7) : Rational(0);
        ok = ok && inner(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]) == want;
      }
    ok = ok && cyclic_beta_order(sectors.at(1), f) == b;
    return Result{ok, {}};
  });

  criterion(9, "twisted vacuum weight 6/7 for (6,3,3,3,3,3,3) and 8/7 for (0,4,4,4,4,4,4)", 0, [&] {
    const auto mults = eigen_multiplicities(*tau, 7);
    const bool ok = mults == std::vector<int>{6, 3, 3, 3, 3, 3, 3} && twisted_vacuum_weight(mults) == Rational(6, 7) &&
                    twisted_vacuum_weight({0, 4, 4, 4, 4, 4, 4}) == Rational(8, 7);
    return Result{ok, {}};
  });

  criterion(10, "min_coset_norm(P0(Leech), r f) = 2/7, lowest sector weight 1", 0, [&] {
    bool ok = true;
    const Rational rho = twisted_vacuum_weight({6, 3, 3, 3, 3, 3, 3});
    for (int r : kSectors) {
      const Rational mn = min_coset_norm(projected, r * f);
      ok = ok && mn == Rational(2, 7) && mn / 2 + rho == 1;
    }
    return Result{ok, {}};
  });

  const IntegralLattice leech_reduced = reduce_basis(*leech);
  criterion(11, "Leech has no norm-2 vectors", 60.0, [&] {
    const auto roots = enumerate_norm(leech_reduced, LatticeVector{}, 2);
    return Result{roots.empty(), std::to_string(roots.size()) + " vectors"};
  });
  if (long_checks)
    criterion(11, "(long) number of norm-4 vectors of Leech is 196560", 0, [&] {
      const auto n = count_norm(leech_reduced, LatticeVector{}, 4);
      return Result{n == 196560, std::to_string(n)};
    });

  criterion(12, "weight-one dimension 48 = 6 + 6 x 7; type A6 with the standard Cartan matrix; level 7 both ways", 0,
            [&] {
              if (!enumerate_norm(leech_reduced, LatticeVector{}, 2).empty()) return Result{false, "Leech has roots"};
              std::vector<TwistSector> ts;
              std::vector<LatticeVector> roots;
              for (int r : kSectors) {
                ts.push_back({r, f, Rational(6, 7), sectors.at(r)});
                roots.insert(roots.end(), sectors.at(r).begin(), sectors.at(r).end());
              }
              const auto rep = assemble_weight_one(ts, static_cast<int>(fixed->rank()));
              const auto rs = identify_root_system(roots);
              Matrix<long> a6(6, 6);
              for (std::size_t i = 0; i < 6; ++i) {
                a6(i, i) = 2;
                if (i + 1 < 6) a6(i, i + 1) = a6(i + 1, i) = -1;
              }
              const bool simple = rs.components.size() == 1;
              const Rational k1 = simple ? level_from_identity(rep.total_dim, rs.components.front()) : Rational(0);
              const bool ok = rep.total_dim == 48 && rs.dynkin_type() == "A6" && rs.cartan_matrix == a6 && simple &&
                              k1 == 7 && rs.level == 7;
              return Result{ok, std::to_string(rep.total_dim) + ", " + rs.dynkin_type() + ", level " +
                                    to_string(k1) + " / " + to_string(rs.level)};
            });

  criterion(13, "randomised oracle properties (>= 1000 cases)", 30.0, [&] {
    const PropertyTally t = run_property_suite(7);
    std::string detail = std::to_string(t.total()) + " cases";
    if (!t.failures.empty()) detail += "; first failure: " + t.failures.front();
    return Result{t.failures.empty() && t.total() >= 1000, detail};
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing criteria" << std::endl;
  return failures ? 1 : 0;
}
