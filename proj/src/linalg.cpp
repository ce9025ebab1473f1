#include "leechorb/linalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace leechorb {

std::string to_string(const Integer& z) { return z.get_str(); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("not a rational number: '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  };
  Integer num = parse_int(slash == std::string::npos ? text : text.substr(0, slash));
  Integer den = slash == std::string::npos ? Integer(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("RationalMatrix product: dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

namespace {

using Row = std::vector<Integer>;

// row -= q * pivot
void sub_multiple(Row& row, const Row& pivot, const Integer& q) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * pivot[j];
}

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  std::vector<Row> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r(m.row(i).begin(), m.row(i).end());
    if (!is_zero(r)) a.push_back(std::move(r));
  }

  std::size_t piv = 0;
  Integer q;
  for (std::size_t col = 0; col < m.cols() && piv < a.size(); ++col) {
    // Euclid on the column: repeatedly take the smallest entry as pivot.
    bool found = false;
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t i = piv; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || abs(a[i][col]) < abs(a[best][col])) best = i;
      }
      if (best == a.size()) break;
      found = true;
      std::swap(a[piv], a[best]);
      bool clean = true;
      for (std::size_t i = piv + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[piv][col].get_mpz_t());
        sub_multiple(a[i], a[piv], q);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a[piv][col] < 0)
      for (auto& x : a[piv]) x = -x;
    for (std::size_t i = 0; i < piv; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[piv][col].get_mpz_t());
      if (q != 0) sub_multiple(a[i], a[piv], q);
    }
    ++piv;
    for (std::size_t i = a.size(); i-- > piv;)
      if (is_zero(a[i])) a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
  }

  IntMatrix out(piv, m.cols());
  for (std::size_t i = 0; i < piv; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = a[i][j];
  return out;
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

std::optional<std::vector<Rational>> solve_in_span(const IntMatrix& basis,
                                                   std::span<const Integer> v) {
  if (basis.rows() > 0 && basis.cols() != v.size())
    throw std::invalid_argument("solve_in_span: dimension mismatch");
  const std::size_t k = basis.rows();
  const std::size_t n = v.size();
  if (k == 0) {
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
      return std::vector<Rational>{};
    return std::nullopt;
  }
  // Augmented system basis^T c = v: n equations, k unknowns.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = basis(i, j);
    a[j][k] = v[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != k) throw std::invalid_argument("solve_in_span: basis rows are dependent");
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> c(k);
  for (std::size_t i = 0; i < r; ++i) c[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
  return c;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t r = m.rows();
  // Rows [ column j of m | e_j ]; after HNF the rows whose left block is zero
  // span exactly the kernel, because the row operations are unimodular.
  IntMatrix aug(n, r + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug(j, i) = m(i, j);
    aug(j, r + j) = 1;
  }
  const IntMatrix h = hnf(aug);
  IntMatrix kernel;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    auto row = h.row(i);
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(r),
                    [](const Integer& x) { return x == 0; }))
      kernel.append_row(row.subspan(r));
  }
  if (kernel.rows() == 0) return IntMatrix(0, n);
  return hnf(kernel);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

namespace {

// Gaussian elimination to upper triangular form; returns the determinant of
// the permutation-adjusted matrix (0 if singular).
Rational eliminate(std::vector<std::vector<Rational>>& a, std::vector<std::vector<Rational>>* rhs) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      if (rhs) std::swap((*rhs)[p], (*rhs)[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      if (rhs)
        for (std::size_t j = 0; j < (*rhs)[i].size(); ++j) (*rhs)[i][j] -= f * (*rhs)[c][j];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
  return a;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  auto a = to_rows(m);
  return eliminate(a, nullptr);
}

std::vector<Rational> solve_square(const RationalMatrix& m, std::span<const Rational> b) {
  if (m.rows() != m.cols() || b.size() != m.rows())
    throw std::invalid_argument("solve_square: dimension mismatch");
  auto a = to_rows(m);
  std::vector<std::vector<Rational>> rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
  if (eliminate(a, &rhs) == 0) throw std::domain_error("solve_square: singular matrix");
  std::vector<Rational> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0] / a[i][i];
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  auto a = to_rows(m);
  std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
  if (eliminate(a, &rhs) == 0) throw std::domain_error("inverse: singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rhs[i][j] / a[i][i];
  return inv;
}

std::vector<std::uint64_t> gf2_echelon(std::vector<std::uint64_t> rows) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t w : rows) {
    for (std::uint64_t b : basis)
      if (w & (b & -b)) w ^= b;
    if (w == 0) continue;
    const std::uint64_t lead = w & -w;
    for (auto& b : basis)
      if (b & lead) b ^= w;
    basis.push_back(w);
  }
  std::sort(basis.begin(), basis.end(),
            [](std::uint64_t x, std::uint64_t y) { return std::countr_zero(x) < std::countr_zero(y); });
  return basis;
}

std::size_t gf2_rank(const BitMatrix& m) {
  if (m.cols > 64) throw std::invalid_argument("gf2_rank: more than 64 columns");
  return gf2_echelon(m.rows).size();
}

}  // namespace leechorb
