#include "leechorb/isometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace leechorb {

namespace {

constexpr std::array<int, 3> kBlockStarts = {1, 9, 17};  // fixed point of each brick

// The 720 seven-cycles on relative positions 1..7 of a brick, each written
// starting at 1, in lexicographic order of the remaining entries.
std::vector<std::array<int, 7>> seven_cycles() {
  std::vector<std::array<int, 7>> out;
  std::array<int, 7> c = {1, 2, 3, 4, 5, 6, 7};
  do {
    out.push_back(c);
  } while (std::next_permutation(c.begin() + 1, c.end()));
  return out;
}

// Writes the cycle into images for the brick starting at `base`.
void place_cycle(std::array<int, kLength>& images, int base, const std::array<int, 7>& cycle) {
  for (int k = 0; k < 7; ++k) images[base + cycle[k] - 1] = base + cycle[(k + 1) % 7];
}

}  // namespace

CoordPerm find_tau(const LinearCode& code) {
  const auto cycles = seven_cycles();
  std::array<int, kLength> images{};
  std::iota(images.begin(), images.end(), 1);

  for (const auto& c : cycles) {
    for (int base : kBlockStarts) place_cycle(images, base, c);
    const auto p = CoordPerm::from_images(images);
    if (code.is_automorphism(p)) return p;
  }

  // Independent patterns.  Words vanishing on the third brick only see the
  // first two cycles, which prunes most pairs before the third is chosen.
  std::vector<int> third;
  for (int i = 17; i <= 24; ++i) third.push_back(i);
  const auto first_two = vanishing_subcode(code, third).codewords();
  std::iota(images.begin(), images.end(), 1);
  for (const auto& ca : cycles) {
    place_cycle(images, 1, ca);
    for (const auto& cb : cycles) {
      place_cycle(images, 9, cb);
      for (int i = 18; i <= 24; ++i) images[i - 1] = i;
      const auto partial = CoordPerm::from_images(images);
      if (!std::all_of(first_two.begin(), first_two.end(),
                       [&](Codeword w) { return code.contains(apply(partial, w)); }))
        continue;
      for (const auto& cc : cycles) {
        place_cycle(images, 17, cc);
        const auto p = CoordPerm::from_images(images);
        if (code.is_automorphism(p)) return p;
      }
    }
  }
  throw SearchExhausted("find_tau: no order-7 automorphism with the required cycle structure");
}

std::vector<int> eigen_multiplicities(const CoordPerm& p, int n) {
  if (n < 1 || !p.pow(n).is_identity())
    throw std::invalid_argument("eigen_multiplicities: p^n is not the identity");
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  for (const auto& orbit : p.orbits()) {
    const int k = static_cast<int>(orbit.size());
    // A k-cycle contributes every k-th root of unity once.
    for (int m = 0; m < k; ++m) ++mult[static_cast<std::size_t>(m * (n / k))];
  }
  return mult;
}

int trace(const CoordPerm& p) { return static_cast<int>(p.fixed_points().size()); }

ProjectionData::ProjectionData(const CoordPerm& p) : perm_(p), order_(p.order()), orbits_(p.orbits()) {}

RationalMatrix ProjectionData::matrix() const {
  RationalMatrix m(kLength, kLength);
  CoordPerm power;
  const Rational w(1, order_);
  for (int i = 0; i < order_; ++i) {
    for (int j = 1; j <= kLength; ++j) m(power(j) - 1, j - 1) += w;
    power = perm_ * power;
  }
  return m;
}

std::vector<Rational> ProjectionData::project(const LatticeVector& v) const {
  std::vector<Rational> out(kLength);
  for (const auto& orbit : orbits_) {
    Integer sum = 0;
    for (int pos : orbit) sum += static_cast<long>(v[pos - 1]);
    const Rational avg = make_rational(sum, static_cast<long>(orbit.size()));
    for (int pos : orbit) out[pos - 1] = avg;
  }
  return out;
}

LatticeVector ProjectionData::project_integral(const LatticeVector& v) const {
  const auto q = project(v);
  if (!is_integral(q)) throw std::domain_error("projection has non-integral coordinates");
  std::vector<Integer> ints;
  ints.reserve(q.size());
  for (const auto& x : q) ints.push_back(x.get_num());
  return LatticeVector::from_integers(ints);
}

bool ProjectionData::is_fixed(const LatticeVector& v) const { return apply(perm_, v) == v; }

bool preserves(const IntegralLattice& lattice, const CoordPerm& p) {
  const auto vs = lattice.basis_vectors();
  return std::all_of(vs.begin(), vs.end(), [&](const LatticeVector& v) { return contains(lattice, apply(p, v)); });
}

namespace {

// Maps integer coefficient rows back through the basis.
IntegralLattice from_coefficients(const IntMatrix& coeffs, const IntegralLattice& lattice) {
  if (coeffs.rows() == 0) return IntegralLattice{};
  return IntegralLattice::from_rows(coeffs * lattice.basis());
}

}  // namespace

IntegralLattice fixed_sublattice(const IntegralLattice& lattice, const CoordPerm& p) {
  if (!preserves(lattice, p)) throw std::invalid_argument("fixed_sublattice: permutation does not preserve lattice");
  const auto vs = lattice.basis_vectors();
  // Coefficient vectors x with x * D = 0, D rows = p b_i - b_i.
  IntMatrix dt(kLength, vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto d = apply(p, vs[i]) - vs[i];
    for (int j = 0; j < kLength; ++j) dt(j, i) = static_cast<long>(d[j]);
  }
  return from_coefficients(integer_kernel(dt), lattice);
}

IntegralLattice projection_lattice(const IntegralLattice& lattice, const CoordPerm& p) {
  const ProjectionData proj(p);
  std::vector<LatticeVector> images;
  for (const auto& v : lattice.basis_vectors()) images.push_back(proj.project_integral(v));
  return IntegralLattice::from_generators(images);
}

IntegralLattice orthogonal_sublattice(const IntegralLattice& lattice, const IntegralLattice& annihilated) {
  const auto bs = lattice.basis_vectors();
  const auto ss = annihilated.basis_vectors();
  if (ss.empty()) return lattice;
  IntMatrix m(ss.size(), bs.size());
  for (std::size_t s = 0; s < ss.size(); ++s)
    for (std::size_t i = 0; i < bs.size(); ++i) m(s, i) = raw_dot(ss[s], bs[i]);
  return from_coefficients(integer_kernel(m), lattice);
}

IntegralLattice one_minus_power_image(const IntegralLattice& lattice, const CoordPerm& p, int r) {
  const CoordPerm pr = p.pow(r);
  std::vector<LatticeVector> images;
  for (const auto& v : lattice.basis_vectors()) images.push_back(v - apply(pr, v));
  return IntegralLattice::from_generators(images);
}

Integer lattice_index(const IntegralLattice& outer, const IntegralLattice& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("lattice_index: ranks differ");
  const std::size_t k = inner.rank();
  RationalMatrix c(k, k);
  const auto vs = inner.basis_vectors();
  for (std::size_t i = 0; i < k; ++i) {
    const auto coords = coordinates(outer, vs[i]);
    if (!coords) throw std::invalid_argument("lattice_index: not a sublattice");
    for (std::size_t j = 0; j < k; ++j) c(i, j) = (*coords)[j];
  }
  const Rational d = k ? determinant(c) : Rational(1);
  return abs(d.get_num());
}

}  // namespace leechorb
