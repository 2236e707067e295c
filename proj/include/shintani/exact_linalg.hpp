#pragma once

// Exact rational and integer linear algebra. Dense, small (n <= 6) matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "shintani/error.hpp"
#include "shintani/rational.hpp"

namespace shintani {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Columns are given as vectors; all must share one length.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t dim) {
    Matrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != dim) throw Error(ErrorKind::InvalidArgument, "column length mismatch");
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
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

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);
LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);

RatMatrix to_rational(const IntMatrix& m);
/// Throws NonIntegralInput when an entry is fractional.
IntMatrix to_integer(const RatMatrix& m);

Rational det(const RatMatrix& m);
Integer det(const IntMatrix& m);

/// Unique x with m x = b. Throws SingularMatrix.
RatVector solve(const RatMatrix& m, const RatVector& b);
RatMatrix inverse(const RatMatrix& m);
/// Inverse of a matrix with determinant +-1. Throws NotUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

std::size_t rank(const RatMatrix& m);
bool linearly_independent(const std::vector<RatVector>& vs, std::size_t dim);
bool linearly_independent(const std::vector<LatticeVector>& vs, std::size_t dim);

/// Coordinates of w in the basis given by the (independent) columns of b, or
/// nullopt when w lies outside their span.
std::optional<RatVector> solve_in_span(const RatMatrix& b, const RatVector& w);

struct SnfResult {
  std::vector<std::int64_t> d;  // d_1 | d_2 | ... ; zeros trail for rank-deficient input
  IntMatrix left;               // left * input * right == diag(d)
  IntMatrix right;
};

/// Smith normal form of a square matrix with nonzero determinant. Throws SingularMatrix.
SnfResult snf(const IntMatrix& m);
/// Smith normal form of an arbitrary rectangular integer matrix.
SnfResult snf_general(const IntMatrix& m);

/// Integer basis of span_Q(vs) intersected with Z^n. Throws DependentInput.
std::vector<LatticeVector> saturate_span(const std::vector<RatVector>& vs, std::size_t dim);

/// Unimodular n x n matrix whose first r columns form a basis of span_Q(vs) ∩ Z^n;
/// the remaining columns complete it to a basis of Z^n. Throws DependentInput.
IntMatrix saturated_basis_extension(const std::vector<RatVector>& vs, std::size_t dim);

}  // namespace shintani
