#include "support.hpp"

#include "leechorb/root_system.hpp"

#include <doctest.h>

#include <set>

using namespace leechorb;
using namespace testing_support;

namespace {

std::vector<LatticeVector> sorted(std::vector<LatticeVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("f") {
  const auto& f = world().f;
  CHECK(inner(f, f) == Rational(2, 7));
  CHECK(apply(world().tau, f) == f);
  CHECK(contains(world().leech, 7 * f));
  CHECK_FALSE(contains(world().leech, f));
  CHECK_FALSE(contains(world().projected, f));
}

TEST_CASE("verify_g_order") {
  const auto ok = verify_g_order(world().f, world().tau, world().leech);
  CHECK(ok.order_seven);
  CHECK_FALSE(ok.degenerate);
  // tau-fixed vector whose seventh multiple is outside the lattice
  const auto small = verify_g_order(LatticeVector::unit(1, 1), world().tau, world().leech);
  CHECK_FALSE(small.order_seven);
  const auto inner_aut = verify_g_order(7 * world().f, world().tau, world().leech);
  CHECK(inner_aut.order_seven);
  CHECK(inner_aut.degenerate);
  CHECK_THROWS_AS(verify_g_order(LatticeVector::unit(2), world().tau, world().leech), std::invalid_argument);
}

TEST_CASE("twisted vacuum weight") {
  CHECK(twisted_vacuum_weight({6, 3, 3, 3, 3, 3, 3}) == Rational(6, 7));
  CHECK(twisted_vacuum_weight({24, 0, 0, 0, 0, 0, 0}) == 0);
  CHECK(twisted_vacuum_weight({0, 4, 4, 4, 4, 4, 4}) == Rational(8, 7));
  // j(7-j)/196 summed by hand: 3 * (6 + 10 + 12 + 12 + 10 + 6) / 196
  CHECK(make_rational(3 * 56, 196) == Rational(6, 7));
  CHECK_THROWS_AS(twisted_vacuum_weight({6, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(twisted_vacuum_weight({25, -1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("sector weights") {
  const auto& f = world().f;
  const LatticeVector x = world().betas[0] - f;
  CHECK(sector_weight(0, x, 1, f) == 1);
  CHECK(sector_weight(Rational(1, 7), x, 1, f) == Rational(8, 7));
  const auto far = enumerate_norm(world().projected, f, Rational(16, 7));
  REQUIRE_FALSE(far.empty());
  CHECK(sector_weight(0, far.front() - f, 1, f) == 2);
}

TEST_CASE("weight-one sector bases") {
  const auto& p = world().projected;
  const auto& f = world().f;
  const auto s1 = weight_one_sector_basis(p, 1, f);
  CHECK(s1 == sorted(world().betas));
  std::vector<LatticeVector> neg;
  for (const auto& v : s1) neg.push_back(-v);
  CHECK(weight_one_sector_basis(p, -1, f) == sorted(neg));
  CHECK(weight_one_sector_basis(p, 2, f) == sorted(consecutive_sums(world().betas, 2)));
  CHECK(weight_one_sector_basis(p, 3, f) == sorted(consecutive_sums(world().betas, 3)));
  CHECK_THROWS_AS(weight_one_sector_basis(p, 0, f), std::invalid_argument);
  CHECK_THROWS_AS(weight_one_sector_basis(p, 4, f), std::invalid_argument);
}

TEST_CASE("the 42 weights are the consecutive runs and their negatives") {
  std::vector<LatticeVector> all;
  for (int r : kSectors) {
    const auto s = weight_one_sector_basis(world().projected, r, world().f);
    all.insert(all.end(), s.begin(), s.end());
  }
  std::set<LatticeVector> runs;
  for (int len = 1; len <= 3; ++len)
    for (const auto& v : consecutive_sums(world().betas, len)) runs.insert(v), runs.insert(-v);
  CHECK(std::set<LatticeVector>(all.begin(), all.end()) == runs);
  CHECK(runs.size() == 42);
  CHECK(all.size() == 42);
}

TEST_CASE("beta relations") {
  const auto& b = world().betas;
  LatticeVector sum;
  for (const auto& v : b) sum = sum + v;
  CHECK(sum.is_zero());
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const int d = ((i - j) % 7 + 7) % 7;
      const Rational want = i == j ? Rational(2, 7) : (d == 1 || d == 6) ? Rational(-1, 7) : Rational(0);
      CHECK(inner(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]) == want);
    }
}

TEST_CASE("cyclic beta order") {
  auto shuffled = world().betas;
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(cyclic_beta_order(shuffled, world().f) == world().betas);
  CHECK(cyclic_beta_order(sorted(shuffled), world().f) == world().betas);
  CHECK_THROWS_AS(cyclic_beta_order({world().f}, world().f), std::invalid_argument);
  auto without_f = world().betas;
  without_f[1] = -without_f[1];
  CHECK_THROWS_AS(cyclic_beta_order(without_f, world().f), std::invalid_argument);
}

TEST_CASE("assemble weight one") {
  std::vector<TwistSector> sectors;
  for (int r : kSectors)
    sectors.push_back({r, world().f, Rational(6, 7), weight_one_sector_basis(world().projected, r, world().f)});
  const auto rep = assemble_weight_one(sectors, 6);
  CHECK(rep.total_dim == 48);
  CHECK(rep.cartan_dim == 6);
  CHECK(rep.sector_dims.at(-3) == 7);

  auto empty = sectors;
  for (auto& s : empty) s.weight_one_vectors.clear();
  CHECK(assemble_weight_one(empty, 6).total_dim == 6);
  CHECK(assemble_weight_one({}, 24).total_dim == 24);
  auto dup = sectors;
  dup.push_back(sectors.front());
  CHECK_THROWS_AS(assemble_weight_one(dup, 6), std::invalid_argument);
  CHECK_THROWS_AS(assemble_weight_one({}, -1), std::invalid_argument);
}

TEST_CASE("cartan eigenvalues") {
  const auto& b = world().betas;
  const auto& tau = world().tau;
  CHECK(cartan_eigenvalue(b[1], b[1], tau) == Rational(2, 7));
  CHECK(cartan_eigenvalue(LatticeVector{}, b[3], tau) == 0);
  CHECK(cartan_eigenvalue(7 * world().f, b[0], tau) == -1);
  CHECK_THROWS_AS(cartan_eigenvalue(LatticeVector::unit(2), b[0], tau), std::invalid_argument);

  const auto basis = world().fixed.basis_vectors();
  for (const auto& root : b)
    CHECK(cartan_eigenvalue(3 * basis[0] - basis[4], root, tau) ==
          3 * cartan_eigenvalue(basis[0], root, tau) - cartan_eigenvalue(basis[4], root, tau));

  // Joint eigenvalues over a basis of the fixed space separate the 42 roots.
  std::vector<LatticeVector> roots;
  for (int r : kSectors) {
    const auto s = weight_one_sector_basis(world().projected, r, world().f);
    roots.insert(roots.end(), s.begin(), s.end());
  }
  std::set<std::vector<Rational>> signatures;
  for (const auto& a : roots) {
    std::vector<Rational> sig;
    for (const auto& x : world().fixed.basis_vectors()) sig.push_back(cartan_eigenvalue(x, a, tau));
    signatures.insert(sig);
  }
  CHECK(signatures.size() == 42);
}
