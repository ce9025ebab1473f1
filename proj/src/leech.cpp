#include "leechorb/leech.hpp"

#include "leechorb/fincke_pohst.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace leechorb {

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector LatticeVector::from_array_rows(const std::array<std::array<std::int64_t, 6>, 4>& rows) {
  Coords c{};
  for (int col = 0; col < 6; ++col)
    for (int row = 0; row < 4; ++row) c[4 * col + row] = rows[row][col];
  return LatticeVector(c);
}

LatticeVector LatticeVector::unit(int position, std::int64_t scale) {
  if (position < 1 || position > kLength) throw std::invalid_argument("LatticeVector::unit: bad position");
  Coords c{};
  c[position - 1] = scale;
  return LatticeVector(c);
}

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<Integer> LatticeVector::to_integers() const {
  std::vector<Integer> out;
  out.reserve(kLength);
  for (auto x : coords_) out.emplace_back(static_cast<long>(x));
  return out;
}

LatticeVector LatticeVector::from_integers(std::span<const Integer> v) {
  if (v.size() != kLength) throw std::invalid_argument("LatticeVector: expected 24 entries");
  Coords c{};
  for (int i = 0; i < kLength; ++i) {
    if (!v[i].fits_slong_p()) throw std::overflow_error("LatticeVector: coordinate exceeds 64 bits");
    c[i] = v[i].get_si();
  }
  return LatticeVector(c);
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LatticeVector: overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LatticeVector: overflow");
  return r;
}

}  // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector::Coords c;
  for (int i = 0; i < kLength; ++i) c[i] = checked_add(a.coords_[i], b.coords_[i]);
  return LatticeVector(c);
}

LatticeVector operator-(const LatticeVector& a) { return -1 * a; }

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

LatticeVector operator*(std::int64_t k, const LatticeVector& a) {
  LatticeVector::Coords c;
  for (int i = 0; i < kLength; ++i) c[i] = checked_mul(k, a.coords_[i]);
  return LatticeVector(c);
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < kLength; ++i) os << (i ? " " : "") << coords_[i];
  return os.str();
}

std::string LatticeVector::to_array() const {
  std::ostringstream os;
  for (int row = 0; row < 4; ++row) {
    os << '|';
    for (int col = 0; col < 6; ++col) {
      std::string cell = std::to_string(coords_[4 * col + row]);
      os << std::string(cell.size() < 4 ? 4 - cell.size() : 0, ' ') << cell;
      if (col % 2 == 1) os << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

LatticeVector apply(const CoordPerm& p, const LatticeVector& v) { return LatticeVector(p.permute(v.coords())); }

Integer raw_dot(const LatticeVector& u, const LatticeVector& v) {
  Integer s = 0;
  for (int i = 0; i < kLength; ++i) s += Integer(static_cast<long>(u[i])) * static_cast<long>(v[i]);
  return s;
}

Rational inner(const LatticeVector& u, const LatticeVector& v) {
  return make_rational(raw_dot(u, v), kInnerDenominator);
}

Rational norm(const LatticeVector& v) { return inner(v, v); }

// ---------------------------------------------------------------------------
// IntegralLattice

IntegralLattice IntegralLattice::from_rows(const IntMatrix& m) {
  if (m.rows() > 0 && m.cols() != kLength) throw std::invalid_argument("IntegralLattice: rows must have 24 entries");
  IntegralLattice l;
  if (m.rows() == 0) return l;
  l.hnf_ = hnf(m);
  if (l.hnf_.rows() == 0) l.hnf_ = IntMatrix(0, kLength);
  l.work_ = l.hnf_;
  return l;
}

IntegralLattice IntegralLattice::from_generators(std::span<const LatticeVector> gens) {
  IntMatrix m(gens.size(), kLength);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < kLength; ++j) m(i, j) = static_cast<long>(gens[i][j]);
  return from_rows(m);
}

namespace {

std::vector<LatticeVector> rows_to_vectors(const IntMatrix& m) {
  std::vector<LatticeVector> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(LatticeVector::from_integers(m.row(i)));
  return out;
}

}  // namespace

std::vector<LatticeVector> IntegralLattice::basis_vectors() const { return rows_to_vectors(hnf_); }
std::vector<LatticeVector> IntegralLattice::working_vectors() const { return rows_to_vectors(work_); }

std::vector<LatticeVector> leech_generators(const LinearCode& code) {
  std::vector<LatticeVector> gens;
  for (Codeword x : code.generators()) {
    LatticeVector::Coords c{};
    for (int i = 0; i < kLength; ++i) c[i] = x[i + 1] ? kUnitCoord / 2 : 0;
    gens.emplace_back(c);
  }
  LatticeVector::Coords quarter{};
  quarter.fill(kUnitCoord / 4);
  gens.push_back(LatticeVector(quarter) - LatticeVector::unit(1));
  for (int i = 1; i <= kLength; ++i)
    for (int j = i + 1; j <= kLength; ++j) {
      gens.push_back(LatticeVector::unit(i) + LatticeVector::unit(j));
      gens.push_back(LatticeVector::unit(i) - LatticeVector::unit(j));
    }
  return gens;
}

IntegralLattice lattice_from_generators(std::span<const LatticeVector> gens) {
  return IntegralLattice::from_generators(gens);
}

IntegralLattice leech_lattice(const LinearCode& code) { return lattice_from_generators(leech_generators(code)); }

std::optional<std::vector<Integer>> coordinates(const IntegralLattice& lattice, const LatticeVector& v) {
  const auto ints = v.to_integers();
  auto c = solve_in_span(lattice.basis(), ints);
  if (!c || !is_integral(*c)) return std::nullopt;
  std::vector<Integer> out;
  out.reserve(c->size());
  for (const auto& q : *c) out.push_back(q.get_num());
  return out;
}

bool contains(const IntegralLattice& lattice, const LatticeVector& v) { return coordinates(lattice, v).has_value(); }

bool is_sublattice(const IntegralLattice& sub, const IntegralLattice& lattice) {
  const auto vs = sub.basis_vectors();
  return std::all_of(vs.begin(), vs.end(), [&](const LatticeVector& v) { return contains(lattice, v); });
}

RationalMatrix gram(const IntegralLattice& lattice) {
  const auto vs = lattice.basis_vectors();
  RationalMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = inner(vs[i], vs[j]);
  return g;
}

Rational det_gram(const IntegralLattice& lattice) {
  if (lattice.rank() == 0) return 1;
  return determinant(gram(lattice));
}

bool is_even(const IntegralLattice& lattice) {
  const RationalMatrix g = gram(lattice);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g(i, i).get_den() != 1 || g(i, i).get_num() % 2 != 0) return false;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j).get_den() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LLL

namespace {

Integer round_nearest(const Rational& q) {
  const Rational shifted = q + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Exact LLL on independent rows with incremental Gram-Schmidt updates.
void lll(std::vector<std::vector<Integer>>& b, const Rational& delta) {
  const std::size_t n = b.size();
  if (n < 2) return;
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> bstar(n);
  bstar[0] = dot(b[0], b[0]);
  std::size_t kmax = 0;
  std::size_t k = 1;

  auto size_reduce = [&](std::size_t kk, std::size_t l) {
    if (abs(mu[kk][l]) * 2 <= 1) return;
    const Integer q = round_nearest(mu[kk][l]);
    for (std::size_t j = 0; j < b[kk].size(); ++j) b[kk][j] -= q * b[l][j];
    mu[kk][l] -= q;
    for (std::size_t i = 0; i < l; ++i) mu[kk][i] -= q * mu[l][i];
  };

  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j < k; ++j) {
        Rational s = dot(b[k], b[j]);
        for (std::size_t i = 0; i < j; ++i) s -= mu[j][i] * mu[k][i] * bstar[i];
        mu[k][j] = s / bstar[j];
      }
      bstar[k] = dot(b[k], b[k]);
      for (std::size_t j = 0; j < k; ++j) bstar[k] -= mu[k][j] * mu[k][j] * bstar[j];
      if (bstar[k] == 0) throw std::invalid_argument("reduce_basis: dependent basis");
    }
    size_reduce(k, k - 1);
    if (bstar[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      const Rational m = mu[k][k - 1];
      const Rational big = bstar[k] + m * m * bstar[k - 1];
      mu[k][k - 1] = m * bstar[k - 1] / big;
      bstar[k] = bstar[k - 1] * bstar[k] / big;
      bstar[k - 1] = big;
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
}

}  // namespace

IntegralLattice reduce_basis(const IntegralLattice& lattice) {
  const IntMatrix& src = lattice.working_basis();
  std::vector<std::vector<Integer>> rows(src.rows());
  for (std::size_t i = 0; i < src.rows(); ++i) rows[i].assign(src.row(i).begin(), src.row(i).end());
  lll(rows, Rational(99, 100));
  IntegralLattice out = lattice;
  IntMatrix work(0, kLength);
  for (const auto& r : rows) work.append_row(r);
  if (hnf(work) != lattice.basis()) throw std::logic_error("reduce_basis: lattice changed during reduction");
  out.work_ = std::move(work);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// |x B + offset|^2 * 392 = (x + t)^T G (x + t) + perp, where G = B B^T is
// the integer Gram of the working basis and t B is the projection of offset
// onto the span.
struct CosetForm {
  RationalMatrix gram;
  std::vector<Rational> shift;
  Rational perp;  // squared length of the orthogonal part, times 392
  std::vector<LatticeVector> basis;
};

CosetForm coset_form(const IntegralLattice& lattice, const LatticeVector& offset) {
  CosetForm f;
  f.basis = lattice.working_vectors();
  const std::size_t k = f.basis.size();
  f.gram = RationalMatrix(k, k);
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) f.gram(i, j) = raw_dot(f.basis[i], f.basis[j]);
    rhs[i] = raw_dot(f.basis[i], offset);
  }
  f.shift = k ? solve_square(f.gram, rhs) : std::vector<Rational>{};
  f.perp = raw_dot(offset, offset);
  for (std::size_t i = 0; i < k; ++i) f.perp -= f.shift[i] * rhs[i];
  return f;
}

LatticeVector combine(const std::vector<LatticeVector>& basis, std::span<const Integer> x,
                      const LatticeVector& offset) {
  std::vector<Integer> acc(kLength);
  for (int j = 0; j < kLength; ++j) acc[j] = static_cast<long>(offset[j]);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < kLength; ++j) acc[j] += x[i] * static_cast<long>(basis[i][j]);
  }
  return LatticeVector::from_integers(acc);
}

}  // namespace

std::vector<LatticeVector> enumerate_norm(const IntegralLattice& lattice, const LatticeVector& offset,
                                          const Rational& target, const EnumerationOptions& opts) {
  const CosetForm f = coset_form(lattice, offset);
  const Rational value = target * kInnerDenominator - f.perp;
  if (value < 0) return {};
  const fincke_pohst::Enumerator en(f.gram, f.shift);
  std::vector<LatticeVector> out;
  for (const auto& x : en.points_with_value(value, opts.threads)) out.push_back(combine(f.basis, x, offset));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_norm(const IntegralLattice& lattice, const LatticeVector& offset, const Rational& target,
                       const EnumerationOptions& opts) {
  const CosetForm f = coset_form(lattice, offset);
  const Rational value = target * kInnerDenominator - f.perp;
  if (value < 0) return 0;
  const fincke_pohst::Enumerator en(f.gram, f.shift);
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<std::size_t> counts(threads, 0);
  en.run(
      value,
      [&](unsigned t) -> fincke_pohst::Visitor {
        return [&counts, t, &value](std::span<const Integer>, const Rational& v, Rational&) {
          if (v == value) ++counts[t];
        };
      },
      threads);
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

Rational min_coset_norm(const IntegralLattice& lattice, const LatticeVector& offset,
                        const EnumerationOptions& opts) {
  const CosetForm f = coset_form(lattice, offset);
  const fincke_pohst::Enumerator en(f.gram, f.shift);
  Rational m = (en.minimum(opts.threads) + f.perp) / kInnerDenominator;
  m.canonicalize();
  return m;
}

}  // namespace leechorb
