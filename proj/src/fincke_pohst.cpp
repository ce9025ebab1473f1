#include "leechorb/fincke_pohst.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace leechorb::fincke_pohst {

Enumerator::Enumerator(const RationalMatrix& gram, std::vector<Rational> shift)
    : gram_(gram), shift_(std::move(shift)) {
  const std::size_t k = gram.rows();
  if (gram.cols() != k || shift_.size() != k)
    throw std::invalid_argument("Enumerator: Gram matrix and shift dimensions disagree");
  diag_.resize(k);
  mu_.assign(k, std::vector<Rational>(k));
  // r[i][j] = (b_i | b*_j)
  std::vector<std::vector<Rational>> r(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram(i, j) != gram(j, i)) throw std::domain_error("Enumerator: Gram matrix not symmetric");
      r[i][j] = gram(i, j);
      for (std::size_t m = 0; m < j; ++m) r[i][j] -= mu_[j][m] * r[i][m];
      mu_[i][j] = r[i][j] / diag_[j];
    }
    diag_[i] = gram(i, i);
    for (std::size_t j = 0; j < i; ++j) diag_[i] -= mu_[i][j] * r[i][j];
    if (diag_[i] <= 0) throw std::domain_error("Enumerator: Gram matrix not positive definite");
  }
}

Rational Enumerator::value_at(std::span<const Integer> x) const {
  const std::size_t k = dimension();
  std::vector<Rational> y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = x[i] + shift_[i];
  Rational v = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) v += y[i] * gram_(i, j) * y[j];
  return v;
}

namespace {

// Integers x with diag * (x - center)^2 <= budget, as a closed range.
struct Range {
  Integer lo, hi;
  bool empty = true;
};

Range coordinate_range(const Rational& center, const Rational& diag, const Rational& budget) {
  Range out;
  if (budget < 0) return out;
  Rational d;
  auto ok = [&](const Integer& x) {
    d = x - center;
    return diag * d * d <= budget;
  };
  Integer start;
  mpz_fdiv_q(start.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
  if (!ok(start)) {
    ++start;
    if (!ok(start)) return out;
  }
  // The feasible set is an interval around `center` containing `start`;
  // a floating guess places the ends, exact tests settle them.
  const double radius = std::sqrt(std::max(0.0, Rational(budget / diag).get_d()));
  const double c = center.get_d();
  Integer lo(std::ceil(c - radius));
  Integer hi(std::floor(c + radius));
  if (lo > start) lo = start;
  if (hi < start) hi = start;
  while (!ok(lo)) ++lo;
  while (ok(lo - 1)) --lo;
  while (!ok(hi)) --hi;
  while (ok(hi + 1)) ++hi;
  out.lo = lo;
  out.hi = hi;
  out.empty = false;
  return out;
}

}  // namespace

void Enumerator::search(std::size_t level, std::vector<Integer>& x, std::vector<Rational>& y,
                        const Rational& used, Rational& bound, const Visitor& visit) const {
  const std::size_t k = dimension();
  Rational s = shift_[level];
  for (std::size_t i = level + 1; i < k; ++i) s += mu_[i][level] * y[i];
  const Rational center = -s;
  const Range range = coordinate_range(center, diag_[level], bound - used);
  if (range.empty) return;
  Rational dev, next;
  for (Integer xi = range.lo; xi <= range.hi; ++xi) {
    dev = xi + s;
    next = used + diag_[level] * dev * dev;
    if (next > bound) continue;  // bound may have shrunk
    x[level] = xi;
    y[level] = xi + shift_[level];
    if (level == 0)
      visit(x, next, bound);
    else
      search(level - 1, x, y, next, bound, visit);
  }
}

void Enumerator::run(const Rational& bound, const Visitor& visit) const {
  run(bound, [&](unsigned) { return visit; }, 1);
}

void Enumerator::run(const Rational& bound, const std::function<Visitor(unsigned)>& make_visitor,
                     unsigned threads) const {
  const std::size_t k = dimension();
  if (k == 0) {
    if (bound >= 0) {
      Rational b = bound;
      make_visitor(0)({}, Rational(0), b);
    }
    return;
  }
  const std::size_t top = k - 1;
  const Range range = coordinate_range(-shift_[top], diag_[top], bound);
  if (range.empty) return;
  Integer width = range.hi - range.lo + 1;
  threads = std::max(1u, threads);
  if (width < threads) threads = static_cast<unsigned>(width.get_ui());

  auto worker = [&](unsigned t) {
    Visitor visit = make_visitor(t);
    std::vector<Integer> x(k);
    std::vector<Rational> y(k);
    Rational local_bound = bound;
    Rational dev, used;
    for (Integer xi = range.lo + t; xi <= range.hi; xi += threads) {
      dev = xi + shift_[top];
      used = diag_[top] * dev * dev;
      if (used > local_bound) continue;
      x[top] = xi;
      y[top] = dev;
      if (top == 0)
        visit(x, used, local_bound);
      else
        search(top - 1, x, y, used, local_bound, visit);
    }
  };

  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();
}

std::vector<std::vector<Integer>> Enumerator::points_with_value(const Rational& value, unsigned threads) const {
  threads = std::max(1u, threads);
  std::vector<std::vector<std::vector<Integer>>> found(threads);
  run(
      value,
      [&](unsigned t) -> Visitor {
        return [&found, t, &value](std::span<const Integer> x, const Rational& v, Rational&) {
          if (v == value) found[t].emplace_back(x.begin(), x.end());
        };
      },
      threads);
  std::vector<std::vector<Integer>> all;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
  return all;
}

Rational Enumerator::minimum(unsigned threads) const {
  const std::size_t k = dimension();
  if (k == 0) return 0;
  // Rounding the shift coordinate-wise gives a feasible starting bound.
  std::vector<Integer> guess(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational half = -shift_[i] + Rational(1, 2);
    mpz_fdiv_q(guess[i].get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  }
  const Rational start = value_at(guess);
  threads = std::max(1u, threads);
  std::vector<Rational> best(threads, start);
  run(
      start,
      [&](unsigned t) -> Visitor {
        return [&best, t](std::span<const Integer>, const Rational& v, Rational& bound) {
          if (v < best[t]) best[t] = v;
          if (v < bound) bound = v;
        };
      },
      threads);
  return *std::min_element(best.begin(), best.end());
}

}  // namespace leechorb::fincke_pohst
