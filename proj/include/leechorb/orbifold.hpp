#pragma once

// Weight bookkeeping for the Z_7 orbifold of the Leech lattice VOA by
// g = sigma_f * tau: twisted-sector lowest weights, weight-one bases, the
// assembled weight-one Lie algebra and its root system.

#include "leechorb/coord_perm.hpp"
#include "leechorb/leech.hpp"
#include "leechorb/root_system.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace leechorb {

/// Sectors r = +-1, +-2, +-3 in ascending order.
inline constexpr std::array<int, 6> kSectors = {-3, -2, -1, 1, 2, 3};

/// f: constant on the tau-orbits, norm 2/7, f in (1/7)Lambda \ Lambda.
LatticeVector reference_f();

/// The six printed generators of the projected lattice P_0(Lambda).
std::vector<LatticeVector> reference_projection_basis();

/// The seven printed weights beta_0 .. beta_6 (index i at position i).
std::vector<LatticeVector> reference_betas();

struct GOrderCheck {
  bool order_seven = false;  // 7f in Lambda, (7f|v) integral on Lambda, tau^7 = 1
  bool degenerate = false;   // f itself in Lambda: sigma_f acts trivially on lattice data
};

/// Lattice-level content of g^7 = 1 for g = sigma_f * tau.
GOrderCheck verify_g_order(const LatticeVector& f, const CoordPerm& tau, const IntegralLattice& leech);

/// rho = sum_{j=1}^{n-1} j (n - j) mults[j] / (4 n^2) with n = mults.size().
/// Throws std::invalid_argument unless the multiplicities sum to 24.
Rational twisted_vacuum_weight(const std::vector<int>& mults);

/// ell + |x + r f|^2 / 2 + rho: the L(0)-weight of w (x) e^x (x) t_r after
/// the Delta-shift by r f.  rho defaults to the trace-3 value 6/7.
Rational sector_weight(const Rational& ell, const LatticeVector& x, int r, const LatticeVector& f,
                       const Rational& vacuum_weight = Rational(6, 7));

/// h_(0)-weights a + r f of the weight-one states: all vectors of the coset
/// P_0(Lambda) + r f with norm 2/7, sorted.
std::vector<LatticeVector> weight_one_sector_basis(const IntegralLattice& projected, int r, const LatticeVector& f,
                                                   const EnumerationOptions& opts = {});

struct TwistSector {
  int r = 0;
  LatticeVector f;
  Rational vacuum_weight;
  std::vector<LatticeVector> weight_one_vectors;
};

struct WeightOneReport {
  int cartan_dim = 0;
  std::map<int, int> sector_dims;
  int total_dim = 0;
};

/// cartan_dim = fixed_rank and total = cartan_dim + sum of sector sizes.
/// The caller is responsible for having checked that the untwisted lattice
/// has no norm-2 vectors, so that the fixed weight-one space is the fixed
/// Cartan part only.  Throws std::invalid_argument on duplicate sectors or a
/// negative rank.
WeightOneReport assemble_weight_one(const std::vector<TwistSector>& sectors, int fixed_rank);

/// (x | root): the eigenvalue of the zero mode of x on the weight-one state
/// with h_(0)-weight `root`.  Throws std::invalid_argument if x is not fixed
/// by tau.
Rational cartan_eigenvalue(const LatticeVector& x, const LatticeVector& root, const CoordPerm& tau);

/// Orders S^1 as beta_0..beta_6 with beta_1 = f and (beta_i|beta_j) = -1/7
/// for cyclic neighbours.  Of the two orientations, the one with the
/// lexicographically larger beta_2 is taken.  Throws std::invalid_argument
/// if the set does not admit such an order.
std::vector<LatticeVector> cyclic_beta_order(const std::vector<LatticeVector>& s1, const LatticeVector& f);

/// Sum of `length` cyclically consecutive betas starting at each index.
std::vector<LatticeVector> consecutive_sums(const std::vector<LatticeVector>& betas, int length);

}  // namespace leechorb
