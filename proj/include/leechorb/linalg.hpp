#pragma once

// Exact integer / rational linear algebra.  Everything here is arbitrary
// precision (GMP); nothing ever rounds.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leechorb {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
/// num/den in canonical form.  gmpxx arithmetic and comparison expect
/// canonical operands.  Throws std::invalid_argument when den is 0.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix.  Entries are value types (Integer or Rational).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (long x : row) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Appends a row; on an empty 0x0 matrix this also fixes the column count.
  void append_row(std::span<const T> r) {
    if (rows_ == 0 && data_.empty()) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix to_rational(const IntMatrix& m);

/// Row Hermite normal form: pivot columns strictly increase down the rows,
/// pivots are positive, entries above a pivot lie in [0, pivot), zero rows
/// are dropped.  Two matrices have the same integer row span iff their HNFs
/// are equal.
IntMatrix hnf(const IntMatrix& m);

/// Solves c * basis = v over the rationals.  Returns nullopt when v is not in
/// the rational row span.  Rows of `basis` must be independent.
std::optional<std::vector<Rational>> solve_in_span(const IntMatrix& basis,
                                                   std::span<const Integer> v);

/// True when every entry is an integer.
bool is_integral(std::span<const Rational> v);

/// Basis (in HNF) of the saturated lattice {x in Z^n : x * m^T = 0}, where n
/// is the column count of m.
IntMatrix integer_kernel(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Solves m * x = b for square nonsingular m.
std::vector<Rational> solve_square(const RationalMatrix& m, std::span<const Rational> b);

RationalMatrix inverse(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// GF(2)

/// Bit matrix with at most 64 columns; column j of row i is bit j of rows[i].
struct BitMatrix {
  std::size_t cols = 0;
  std::vector<std::uint64_t> rows;
};

std::size_t gf2_rank(const BitMatrix& m);

/// Reduced row echelon form over GF(2), zero rows dropped.  The pivot of each
/// row is its lowest set bit, and no other row has that bit set.
std::vector<std::uint64_t> gf2_echelon(std::vector<std::uint64_t> rows);

}  // namespace leechorb
