#include "support.hpp"

#include "leechorb/fincke_pohst.hpp"

#include <doctest.h>

#include <set>

using namespace leechorb;
using namespace testing_support;

namespace {

// Fraction-free (Bareiss) determinant, independent of the rational routine.
Integer bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

LatticeVector octad_half(Codeword w) {
  LatticeVector::Coords c{};
  for (int p : w.support()) c[p - 1] = kUnitCoord / 2;
  return LatticeVector(c);
}

}  // namespace

TEST_CASE("lattice vector arithmetic and inner product") {
  const LatticeVector e1 = LatticeVector::unit(1);
  const LatticeVector e2 = LatticeVector::unit(2);
  CHECK(norm(e1) == 2);
  CHECK(inner(e1, e2) == 0);
  CHECK(norm(e1 + e2) == 4);
  CHECK(inner(world().f, world().f) == Rational(2, 7));
  CHECK(inner(world().f, LatticeVector{}) == 0);
  CHECK(inner(world().betas[1], world().betas[2]) == Rational(-1, 7));
  CHECK(raw_dot(world().f, world().f) == 112);
  LatticeVector::Coords big{};
  big[0] = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(LatticeVector(big) + LatticeVector(big), std::overflow_error);
  CHECK_THROWS_AS(2 * LatticeVector(big), std::overflow_error);
  const std::vector<Integer> huge(24, Integer("100000000000000000000"));
  CHECK_THROWS_AS(LatticeVector::from_integers(huge), std::overflow_error);
}

TEST_CASE("array rows read column-major positions") {
  const auto v = LatticeVector::from_array_rows({{{1, 5, 9, 13, 17, 21}, {2, 6, 10, 14, 18, 22},
                                                  {3, 7, 11, 15, 19, 23}, {4, 8, 12, 16, 20, 24}}});
  for (int i = 0; i < kLength; ++i) CHECK(v[i] == i + 1);
  CHECK(reference_f()[0] == 5);
  CHECK(reference_f()[8] == 1);
  CHECK(reference_f()[16] == 3);
}

TEST_CASE("leech generator examples") {
  const auto gens = leech_generators(world().code);
  const std::set<LatticeVector> set(gens.begin(), gens.end());
  const LatticeVector half_e1 = octad_half(column_pair_octads()[0]);
  CHECK(half_e1[0] == 14);
  CHECK(half_e1[8] == 0);
  CHECK(contains(world().leech, half_e1));
  CHECK(norm(half_e1) == 4);
  LatticeVector::Coords omega{};
  omega.fill(7);
  omega[0] = -21;
  CHECK(set.count(LatticeVector(omega)));
  CHECK(norm(LatticeVector(omega)) == 4);
  CHECK(set.count(LatticeVector::unit(1) + LatticeVector::unit(2)));
  CHECK(set.count(LatticeVector::unit(1) - LatticeVector::unit(2)));
  CHECK(gens.size() == 12 + 1 + 2 * 276);
  for (auto w : world().code.codewords())
    if (w.weight() == 8) CHECK(norm(octad_half(w)) == 4);
}

TEST_CASE("lattice_from_generators") {
  CHECK(world().leech.rank() == 24);
  auto gens = leech_generators(world().code);
  auto doubled = gens;
  doubled.insert(doubled.end(), gens.begin(), gens.end());
  CHECK(lattice_from_generators(doubled) == world().leech);
  const LatticeVector v = world().f;
  const std::vector<LatticeVector> single = {v};
  const auto l1 = lattice_from_generators(single);
  CHECK(l1.rank() == 1);
  CHECK(contains(l1, v));
  CHECK(l1.basis_vectors().front() == v);
}

TEST_CASE("leech gram: unimodular and even") {
  const auto& l = world().leech;
  CHECK(det_gram(l) == 1);
  CHECK(is_even(l));
  const RationalMatrix g = gram(l);
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(g(i, i).get_den() == 1);
    CHECK(g(i, i).get_num() % 2 == 0);
  }
  // independent route: det(B B^T) = 392^24 by fraction-free elimination
  const IntMatrix b = l.basis();
  Integer expected;
  mpz_pow_ui(expected.get_mpz_t(), Integer(kInnerDenominator).get_mpz_t(), 24);
  CHECK(bareiss(b * b.transposed()) == expected);
}

TEST_CASE("gram of small lattices") {
  const std::vector<LatticeVector> f = {world().f};
  CHECK(det_gram(lattice_from_generators(f)) == Rational(2, 7));
  CHECK(det_gram(IntegralLattice{}) == 1);
  const std::vector<LatticeVector> odd = {LatticeVector::unit(1, 14)};
  CHECK_FALSE(is_even(lattice_from_generators(odd)));
}

TEST_CASE("membership examples") {
  CHECK(contains(world().leech, octad_half(column_pair_octads()[0])));
  CHECK_FALSE(contains(world().projected, world().f));
  CHECK(contains(world().leech, 7 * world().f));
  CHECK_FALSE(contains(world().leech, world().f));
  const auto c = coordinates(world().leech, 7 * world().f);
  REQUIRE(c);
  std::vector<Integer> sum(24);
  for (std::size_t i = 0; i < c->size(); ++i)
    for (std::size_t j = 0; j < 24; ++j) sum[j] += (*c)[i] * world().leech.basis()(i, j);
  CHECK(LatticeVector::from_integers(sum) == 7 * world().f);
  CHECK_FALSE(coordinates(world().leech, LatticeVector::unit(1, 1)));
}

TEST_CASE("reduce_basis keeps the lattice") {
  const auto& l = world().leech;
  const auto& r = world().leech_reduced;
  CHECK(r == l);
  const auto max_diag = [](const IntMatrix& b) {
    Integer m = 0;
    for (std::size_t i = 0; i < b.rows(); ++i) m = std::max(m, square_sum(b.row(i)));
    return m;
  };
  CHECK(max_diag(r.working_basis()) <= max_diag(l.basis()));
  const std::vector<LatticeVector> one = {LatticeVector::unit(3)};
  const auto l1 = lattice_from_generators(one);
  CHECK(reduce_basis(l1).working_vectors() == one);
}

TEST_CASE("enumerate_norm examples") {
  const auto s1 = enumerate_norm(world().projected, world().f, Rational(2, 7));
  std::vector<LatticeVector> betas = world().betas;
  std::sort(betas.begin(), betas.end());
  CHECK(s1 == betas);
  CHECK(enumerate_norm(world().projected, LatticeVector{}, 0) == std::vector<LatticeVector>{LatticeVector{}});
  CHECK(enumerate_norm(world().leech_reduced, LatticeVector{}, 2).empty());
  CHECK(count_norm(world().projected, world().f, Rational(2, 7)) == 7);
  CHECK(enumerate_norm(world().projected, world().f, Rational(1, 7)).empty());
}

TEST_CASE("enumerate_norm is thread-count independent") {
  const auto a = enumerate_norm(world().projected, 2 * world().f, Rational(16, 7), {1});
  const auto b = enumerate_norm(world().projected, 2 * world().f, Rational(16, 7), {3});
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("enumerate_norm rejects degenerate Gram matrices") {
  const std::vector<LatticeVector> gens = {LatticeVector::unit(1), LatticeVector::unit(2)};
  const auto l = lattice_from_generators(gens);
  CHECK(enumerate_norm(l, LatticeVector{}, 2).size() == 4);
  CHECK_THROWS_AS(fincke_pohst::Enumerator(to_rational(IntMatrix{{1, 2}, {2, 1}}), {0, 0}), std::domain_error);
  CHECK_THROWS_AS(fincke_pohst::Enumerator(to_rational(IntMatrix{{1, 0}, {1, 1}}), {0, 0}), std::domain_error);
  CHECK_THROWS_AS(fincke_pohst::Enumerator(to_rational(IntMatrix{{1, 0}, {0, 1}}), {0}), std::invalid_argument);
}

TEST_CASE("min_coset_norm examples") {
  for (int r : kSectors) CHECK(min_coset_norm(world().projected, r * world().f) == Rational(2, 7));
  CHECK(min_coset_norm(world().projected, world().betas[0] - world().f) == 0);
  const LatticeVector v = 2 * LatticeVector::unit(5);
  const std::vector<LatticeVector> gens = {v};
  CHECK(min_coset_norm(lattice_from_generators(gens), LatticeVector::unit(5)) == norm(v) / 4);
}
