#include "leechorb/orbifold.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace leechorb {

namespace {

using Rows = std::array<std::array<std::int64_t, 6>, 4>;

LatticeVector rows(const Rows& r) { return LatticeVector::from_array_rows(r); }

}  // namespace

LatticeVector reference_f() {
  return rows({{{5, 1, 1, 1, 3, 3}, {1, 1, 1, 1, 3, 3}, {1, 1, 1, 1, 3, 3}, {1, 1, 1, 1, 3, 3}}});
}

std::vector<LatticeVector> reference_projection_basis() {
  return {
      rows({{{0, 4, 0, 4, 0, 0}, {4, 4, 4, 4, 0, 0}, {4, 4, 4, 4, 0, 0}, {4, 4, 4, 4, 0, 0}}}),
      rows({{{0, 0, 0, 4, 0, 4}, {0, 0, 4, 4, 4, 4}, {0, 0, 4, 4, 4, 4}, {0, 0, 4, 4, 4, 4}}}),
      rows({{{0, 4, 0, -4, 0, 0}, {4, 4, -4, -4, 0, 0}, {4, 4, -4, -4, 0, 0}, {4, 4, -4, -4, 0, 0}}}),
      rows({{{-14, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}}}),
      rows({{{0, 0, -14, 2, 0, 0}, {0, 0, 2, 2, 0, 0}, {0, 0, 2, 2, 0, 0}, {0, 0, 2, 2, 0, 0}}}),
      rows({{{-7, 1, -7, 1, -7, -3}, {1, 1, 1, 1, -3, -3}, {1, 1, 1, 1, -3, -3}, {1, 1, 1, 1, -3, -3}}}),
  };
}

std::vector<LatticeVector> reference_betas() {
  return {
      rows({{{-9, -1, 1, 1, 3, -1}, {-1, -1, 1, 1, -1, -1}, {-1, -1, 1, 1, -1, -1}, {-1, -1, 1, 1, -1, -1}}}),
      reference_f(),
      rows({{{-2, -2, -6, -2, -4, 0}, {-2, -2, -2, -2, 0, 0}, {-2, -2, -2, -2, 0, 0}, {-2, -2, -2, -2, 0, 0}}}),
      rows({{{-2, 2, 8, 0, -4, 0}, {2, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}}}),
      rows({{{5, -3, 1, 1, 3, -1}, {-3, -3, 1, 1, -1, -1}, {-3, -3, 1, 1, -1, -1}, {-3, -3, 1, 1, -1, -1}}}),
      rows({{{-2, 2, -6, 2, -4, 0}, {2, 2, 2, 2, 0, 0}, {2, 2, 2, 2, 0, 0}, {2, 2, 2, 2, 0, 0}}}),
      rows({{{5, 1, 1, -3, 3, -1}, {1, 1, -3, -3, -1, -1}, {1, 1, -3, -3, -1, -1}, {1, 1, -3, -3, -1, -1}}}),
  };
}

GOrderCheck verify_g_order(const LatticeVector& f, const CoordPerm& tau, const IntegralLattice& leech) {
  if (apply(tau, f) != f) throw std::invalid_argument("verify_g_order: f is not fixed by tau");
  GOrderCheck out;
  const LatticeVector seven_f = 7 * f;
  bool integral_pairing = true;
  for (const auto& v : leech.basis_vectors())
    if (inner(seven_f, v).get_den() != 1) integral_pairing = false;
  out.order_seven = tau.order() == 7 && contains(leech, seven_f) && integral_pairing;
  out.degenerate = contains(leech, f);
  return out;
}

Rational twisted_vacuum_weight(const std::vector<int>& mults) {
  int total = 0;
  for (int m : mults) {
    if (m < 0) throw std::invalid_argument("twisted_vacuum_weight: negative multiplicity");
    total += m;
  }
  if (total != kLength) throw std::invalid_argument("twisted_vacuum_weight: multiplicities must sum to 24");
  const long n = static_cast<long>(mults.size());
  Rational rho = 0;
  for (long j = 1; j < n; ++j) rho += make_rational(j * (n - j) * mults[static_cast<std::size_t>(j)], 4 * n * n);
  return rho;
}

Rational sector_weight(const Rational& ell, const LatticeVector& x, int r, const LatticeVector& f,
                       const Rational& vacuum_weight) {
  Rational w = ell + norm(x + r * f) / 2 + vacuum_weight;
  w.canonicalize();
  return w;
}

std::vector<LatticeVector> weight_one_sector_basis(const IntegralLattice& projected, int r, const LatticeVector& f,
                                                   const EnumerationOptions& opts) {
  if (r == 0 || r < -3 || r > 3) throw std::invalid_argument("weight_one_sector_basis: r must be in +-1, +-2, +-3");
  return enumerate_norm(projected, r * f, Rational(2, 7), opts);
}

WeightOneReport assemble_weight_one(const std::vector<TwistSector>& sectors, int fixed_rank) {
  if (fixed_rank < 0) throw std::invalid_argument("assemble_weight_one: negative rank");
  WeightOneReport rep;
  rep.cartan_dim = fixed_rank;
  rep.total_dim = fixed_rank;
  for (const auto& s : sectors) {
    if (rep.sector_dims.count(s.r)) throw std::invalid_argument("assemble_weight_one: duplicate sector");
    const int d = static_cast<int>(s.weight_one_vectors.size());
    rep.sector_dims[s.r] = d;
    rep.total_dim += d;
  }
  return rep;
}

Rational cartan_eigenvalue(const LatticeVector& x, const LatticeVector& root, const CoordPerm& tau) {
  if (apply(tau, x) != x) throw std::invalid_argument("cartan_eigenvalue: x is not fixed by tau");
  return inner(x, root);
}

std::vector<LatticeVector> cyclic_beta_order(const std::vector<LatticeVector>& s1, const LatticeVector& f) {
  const std::size_t n = s1.size();
  if (n != 7) throw std::invalid_argument("cyclic_beta_order: expected 7 vectors");
  const auto anchor = std::find(s1.begin(), s1.end(), f);
  if (anchor == s1.end()) throw std::invalid_argument("cyclic_beta_order: f is not in the set");
  const Rational neighbour(-1, 7);
  auto neighbours = [&](const LatticeVector& v) {
    std::vector<LatticeVector> out;
    for (const auto& w : s1)
      if (inner(v, w) == neighbour) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<LatticeVector> cycle = {f};
  auto nb = neighbours(f);
  if (nb.size() != 2) throw std::invalid_argument("cyclic_beta_order: f does not have two neighbours");
  cycle.push_back(nb[1]);
  while (cycle.size() < n) {
    const auto next = neighbours(cycle.back());
    if (next.size() != 2) throw std::invalid_argument("cyclic_beta_order: neighbour graph is not a 7-cycle");
    const auto& prev = cycle[cycle.size() - 2];
    cycle.push_back(next[0] == prev ? next[1] : next[0]);
  }
  // cycle = beta_1 .. beta_7 = beta_0
  std::vector<LatticeVector> betas(n);
  for (std::size_t i = 0; i < n; ++i) betas[(i + 1) % n] = cycle[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = (i + n - j) % n;
      const Rational expected = i == j ? Rational(2, 7) : (d == 1 || d == n - 1) ? neighbour : Rational(0);
      if (inner(betas[i], betas[j]) != expected)
        throw std::invalid_argument("cyclic_beta_order: Gram relation fails");
    }
  return betas;
}

std::vector<LatticeVector> consecutive_sums(const std::vector<LatticeVector>& betas, int length) {
  const std::size_t n = betas.size();
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector s;
    for (int m = 0; m < length; ++m) s = s + betas[(i + static_cast<std::size_t>(m)) % n];
    out.push_back(s);
  }
  return out;
}

}  // namespace leechorb
