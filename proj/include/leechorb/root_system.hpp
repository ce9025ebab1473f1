#pragma once

#include "leechorb/leech.hpp"
#include "leechorb/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace leechorb {

/// Thrown when a vector set fails the root-system axioms.
class NotARootSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One irreducible component, e.g. {'A', 6}.
struct DynkinComponent {
  char series = 'A';
  int rank = 0;
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

struct RootSystemReport {
  std::vector<LatticeVector> roots;         // sorted
  std::vector<LatticeVector> simple_roots;  // ordered along the Dynkin diagram
  Matrix<long> cartan_matrix;
  std::vector<DynkinComponent> components;  // sorted by (series, rank)
  /// 2 / (alpha|alpha) for a long root alpha.
  Rational level;

  /// "A6", or components joined by '+', e.g. "A1+A1".
  std::string dynkin_type() const;
};

/// Identifies a finite set of vectors as a crystallographic root system.
/// Positive roots are those whose first nonzero coordinate is positive;
/// simple roots are positive roots that are not sums of two positive roots.
/// Checks integrality of every Cartan pairing 2(a|b)/(b|b), closure under
/// all reflections, and that a + b is a root whenever the pairing is -1.
/// Throws NotARootSystem with a diagnostic otherwise.
RootSystemReport identify_root_system(const std::vector<LatticeVector>& roots);

/// Classifies a Cartan matrix into irreducible components.  Throws
/// NotARootSystem if a component is not a Dynkin diagram.
std::vector<DynkinComponent> classify_cartan(const Matrix<long>& cartan);

/// Dual Coxeter number of a simple type.
int dual_coxeter_number(const DynkinComponent& type);
/// Dimension of the simple Lie algebra of this type.
int lie_algebra_dimension(const DynkinComponent& type);
/// Number of roots of this type.
int root_count(const DynkinComponent& type);

/// Parses labels such as "A6" or "E8".
DynkinComponent parse_dynkin(const std::string& label);

/// k = h^vee * 24 / (dim V_1 - 24).  Throws std::domain_error when
/// dim_v1 <= 24.
Rational level_from_identity(int dim_v1, const DynkinComponent& type);

}  // namespace leechorb
