#pragma once

// Fincke-Pohst enumeration of integer points in a shifted ellipsoid
//   { x in Z^k : (x + t)^T G (x + t) <= bound }
// for a positive definite rational Gram matrix G.  All bounds are computed
// in exact rational arithmetic; floating point is only used to guess the
// end points of each coordinate interval, and every guess is corrected by
// an exact test.

#include "leechorb/linalg.hpp"

#include <functional>
#include <span>
#include <vector>

namespace leechorb::fincke_pohst {

/// Called for each point with its exact form value.  The visitor may lower
/// `bound` to prune the rest of the search (used for minimum search).
using Visitor = std::function<void(std::span<const Integer> x, const Rational& value, Rational& bound)>;

class Enumerator {
 public:
  /// Throws std::domain_error when `gram` is not positive definite and
  /// std::invalid_argument on a dimension mismatch.
  Enumerator(const RationalMatrix& gram, std::vector<Rational> shift);

  std::size_t dimension() const noexcept { return diag_.size(); }

  /// Visits every point with form value <= bound.  With threads > 1 the
  /// outermost coordinate range is split across threads and each thread gets
  /// its own visitor copy and bound, so visitors must be safe to run
  /// concurrently (they receive a thread index through `make_visitor`).
  void run(const Rational& bound, const std::function<Visitor(unsigned)>& make_visitor,
           unsigned threads = 1) const;

  /// Convenience single-threaded overload.
  void run(const Rational& bound, const Visitor& visit) const;

  /// Points with form value exactly `value`.
  std::vector<std::vector<Integer>> points_with_value(const Rational& value, unsigned threads = 1) const;

  /// Minimum of the form over all integer x.
  Rational minimum(unsigned threads = 1) const;

  /// Exact form value at x.
  Rational value_at(std::span<const Integer> x) const;

 private:
  void search(std::size_t level, std::vector<Integer>& x, std::vector<Rational>& y,
              const Rational& used, Rational& bound, const Visitor& visit) const;

  RationalMatrix gram_;
  std::vector<Rational> shift_;
  std::vector<Rational> diag_;      // squared Gram-Schmidt lengths
  std::vector<std::vector<Rational>> mu_;  // mu_[i][j], j < i
};

}  // namespace leechorb::fincke_pohst
