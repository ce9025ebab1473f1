#include "support.hpp"

#include "leechorb/coord_perm.hpp"
#include "leechorb/fixtures.hpp"

#include <doctest.h>

#include <bit>
#include <sstream>

using namespace leechorb;
using namespace testing_support;

TEST_CASE("codeword basics") {
  const Codeword e1 = column_pair_octads()[0];
  CHECK(e1.to_string() == "111111110000000000000000");
  CHECK(Codeword::parse(e1.to_string()) == e1);
  CHECK(e1.weight() == 8);
  CHECK(e1.support() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK((e1 + e1).weight() == 0);
  CHECK_THROWS_AS(Codeword::parse("0101"), std::invalid_argument);
  CHECK_THROWS_AS(Codeword::parse(std::string(23, '0') + "2"), std::invalid_argument);
  CHECK(e1.to_array() == "|**|  |  |\n|**|  |  |\n|**|  |  |\n|**|  |  |\n");
}

TEST_CASE("golay parameters against an independent enumeration") {
  const LinearCode& g = world().code;
  CHECK(g.dimension() == 12);
  // Independent oracle: XOR every subset of the generator words directly.
  const auto gens = mog_golay_generators();
  std::map<int, std::size_t> dist;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if (mask >> i & 1u) w ^= gens[static_cast<std::size_t>(i)].bits();
    ++dist[std::popcount(w)];
  }
  const std::map<int, std::size_t> expected = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  CHECK(dist == expected);
  CHECK(g.weight_distribution() == expected);
  CHECK(g.minimum_weight() == 8);
  CHECK(g.codewords().size() == 4096);
  CHECK(g.is_self_dual());
}

TEST_CASE("contains examples") {
  const LinearCode& g = world().code;
  CHECK(g.contains(Codeword{}));
  CHECK(g.contains(column_pair_octads()[0]));
  for (int p = 1; p <= 24; ++p) {
    const int pos[] = {p};
    CHECK_FALSE(g.contains(Codeword::from_positions(pos)));
  }
}

TEST_CASE("MOG structure") {
  const auto cols = mog_columns();
  CHECK(cols[0].support() == std::vector<int>{1, 2, 3, 4});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) CHECK(world().code.contains(cols[i] + cols[j]));
  for (auto o : column_pair_octads()) CHECK(world().code.contains(o));
}

TEST_CASE("vanishing_subcode examples") {
  const LinearCode& g = world().code;
  CHECK(vanishing_subcode(g, std::vector<int>{}).dimension() == 12);
  const std::vector<int> one = {1};
  CHECK(vanishing_subcode(g, one).dimension() == 11);
  std::size_t c1_zero = 0;
  for (auto w : g.codewords()) c1_zero += !w[1];
  CHECK(c1_zero == 2048);
  const std::vector<int> three = {1, 9, 17};
  CHECK(vanishing_subcode(g, three).dimension() == 9);
}

TEST_CASE("image_one_minus_perm") {
  const LinearCode& g = world().code;
  CHECK(image_one_minus_perm(g, CoordPerm{}).dimension() == 0);
  const std::vector<int> three = {1, 9, 17};
  const LinearCode g0 = vanishing_subcode(g, three);
  for (int r = 1; r <= 6; ++r) {
    const LinearCode img = image_one_minus_perm(g, world().tau.pow(r));
    CHECK(is_subcode(img, g0));
    CHECK(img == g0);
    CHECK(img.dimension() == 9);
  }
  CHECK_THROWS_AS(image_one_minus_perm(g, CoordPerm::from_cycles("(1 2)")), std::invalid_argument);
  // containment in the subcode vanishing on the fixed points, for each automorphism at hand
  for (int r = 0; r < 7; ++r) {
    const CoordPerm p = world().tau.pow(r);
    const auto fixed = p.fixed_points();
    CHECK(is_subcode(image_one_minus_perm(g, p), vanishing_subcode(g, fixed)));
  }
}

TEST_CASE("checked_golay rejects bad generator sets") {
  std::vector<Codeword> gens(mog_golay_generators().begin(), mog_golay_generators().end());
  CHECK(checked_golay(gens) == world().code);
  auto short_set = gens;
  short_set.pop_back();
  CHECK_THROWS_AS(checked_golay(short_set), CodeConstructionError);
  auto broken = gens;
  broken[0] = Codeword(broken[0].bits() ^ 1u << 23);
  CHECK_THROWS_AS(checked_golay(broken), CodeConstructionError);
}

TEST_CASE("linear code of a small example") {
  const std::vector<Codeword> gens = {Codeword(0b11), Codeword(0b110), Codeword(0b101)};
  const LinearCode c(gens);
  CHECK(c.dimension() == 2);
  CHECK(c.minimum_weight() == 2);
  CHECK_FALSE(c.is_self_dual());
  CHECK(LinearCode().minimum_weight() == 0);
}

TEST_CASE("coordinate permutations") {
  const CoordPerm p = CoordPerm::from_cycles("(2 3 4)(10 11)");
  CHECK(p(2) == 3);
  CHECK(p(4) == 2);
  CHECK(p(1) == 1);
  CHECK(p.order() == 6);
  CHECK(p.to_cycle_string() == "(2 3 4)(10 11)");
  CHECK(CoordPerm::from_cycles(p.to_cycle_string()) == p);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.fixed_points().size() == 19);
  CHECK(CoordPerm{}.to_cycle_string() == "()");
  CHECK_THROWS_AS(CoordPerm::from_cycles("(1 25)"), std::invalid_argument);
  CHECK_THROWS_AS(CoordPerm::from_cycles("(1 2)(2 3)"), std::invalid_argument);
  CHECK_THROWS_AS(CoordPerm::from_cycles("(1 2"), std::invalid_argument);
  std::array<int, kLength> bad{};
  bad.fill(1);
  CHECK_THROWS_AS(CoordPerm::from_images(bad), std::invalid_argument);
  const auto q = CoordPerm::from_cycles("(1 2)");
  CHECK((p * q)(1) == p(q(1)));
}

TEST_CASE("fixture parsing") {
  std::istringstream good("# comment\n\n111111110000000000000000  # E1\n");
  CHECK(parse_codewords(good).size() == 1);
  std::istringstream bad_len("1111\n");
  CHECK_THROWS_AS(parse_codewords(bad_len), FixtureError);
  std::istringstream vecs("1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24\n");
  const auto vs = parse_vectors(vecs);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0][23] == 24);
  std::istringstream short_vec("1 2 3\n");
  CHECK_THROWS_AS(parse_vectors(short_vec), FixtureError);
  std::istringstream junk("1 2 x 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24\n");
  CHECK_THROWS_AS(parse_vectors(junk), FixtureError);
  CHECK_THROWS_AS(read_vectors("/nonexistent/file.vec"), FixtureError);
  std::ostringstream out;
  write_vectors(out, vs);
  std::istringstream back(out.str());
  CHECK(parse_vectors(back) == vs);
}

TEST_CASE("shipped fixtures equal the built-in data") {
  const std::filesystem::path dir = LEECHORB_FIXTURE_DIR;
  const auto gens = read_codewords(dir / "golay.gen");
  CHECK(std::equal(gens.begin(), gens.end(), mog_golay_generators().begin(), mog_golay_generators().end()));
  CHECK(read_vectors(dir / "lemma34.vec") == reference_projection_basis());
  CHECK(read_vectors(dir / "f.vec") == std::vector<LatticeVector>{reference_f()});
  CHECK(read_vectors(dir / "lemma35_s1.vec") == reference_betas());
}
