#include "shintani/exact_linalg.hpp"

#include <cstdlib>
#include <utility>

namespace shintani {

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix/vector shape mismatch");
  RatVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix/vector shape mismatch");
  LatticeVector r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] = checked_add(r[i], checked_mul(a(i, j), v[j]));
  return r;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw Error(ErrorKind::NonIntegralInput, "matrix has fractional entries");
      r(i, j) = to_int64(m(i, j).get_num());
    }
  return r;
}

namespace {

// Row-reduces a copy of m in place; returns the pivot columns and the sign/scale
// bookkeeping needed for the determinant.
struct Elimination {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  Rational det_factor = 1;
};

Elimination eliminate(RatMatrix m) {
  Elimination e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      e.det_factor = -e.det_factor;
    }
    const Rational p = m(row, col);
    e.det_factor *= p;
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  auto e = eliminate(m);
  if (e.pivots.size() < m.rows()) return 0;
  return e.det_factor;
}

Integer det(const IntMatrix& m) { return det(to_rational(m)).get_num(); }

RatVector solve(const RatMatrix& m, const RatVector& b) {
  if (!m.square() || m.rows() != b.size()) throw Error(ErrorKind::InvalidArgument, "solve shape mismatch");
  const std::size_t n = m.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto e = eliminate(std::move(aug));
  if (e.pivots.size() < n || e.pivots.back() >= n) throw Error(ErrorKind::SingularMatrix, "solve: det = 0");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = eliminate(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
    throw Error(ErrorKind::SingularMatrix, "inverse: det = 0");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Integer d = det(m);
  if (d != 1 && d != -1) throw Error(ErrorKind::NotUnimodular, "determinant " + d.get_str());
  return to_integer(inverse(to_rational(m)));
}

std::size_t rank(const RatMatrix& m) { return eliminate(m).pivots.size(); }

bool linearly_independent(const std::vector<RatVector>& vs, std::size_t dim) {
  if (vs.size() > dim) return false;
  if (vs.empty()) return true;
  return rank(RatMatrix::from_columns(vs, dim)) == vs.size();
}

bool linearly_independent(const std::vector<LatticeVector>& vs, std::size_t dim) {
  std::vector<RatVector> r;
  for (const auto& v : vs) r.push_back(to_rational(v));
  return linearly_independent(r, dim);
}

std::optional<RatVector> solve_in_span(const RatMatrix& b, const RatVector& w) {
  const std::size_t n = b.rows(), r = b.cols();
  if (w.size() != n) throw Error(ErrorKind::InvalidArgument, "solve_in_span shape mismatch");
  RatMatrix aug(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = b(i, j);
    aug(i, r) = w[i];
  }
  auto e = eliminate(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == r) return std::nullopt;  // inconsistent
  if (e.pivots.size() < r) throw Error(ErrorKind::DependentInput, "span basis is dependent");
  RatVector x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = e.reduced(i, r);
  return x;
}

SnfResult snf_general(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(left(i, c), left(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(right(r, i), right(r, j));
  };
  // row_i += f * row_j
  auto add_row = [&](std::size_t i, std::size_t j, std::int64_t f) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = checked_add(a(i, c), checked_mul(f, a(j, c)));
    for (std::size_t c = 0; c < m; ++c) left(i, c) = checked_add(left(i, c), checked_mul(f, left(j, c)));
  };
  // col_i += f * col_j
  auto add_col = [&](std::size_t i, std::size_t j, std::int64_t f) {
    for (std::size_t r = 0; r < m; ++r) a(r, i) = checked_add(a(r, i), checked_mul(f, a(r, j)));
    for (std::size_t r = 0; r < n; ++r) right(r, i) = checked_add(right(r, i), checked_mul(f, right(r, j)));
  };

  const std::size_t k = std::min(m, n);
  std::vector<std::int64_t> d(k, 0);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == m || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;  // remaining block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, -(a(i, t) / a(t, t)));
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, -(a(t, j) / a(t, t)));
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) left(t, c) = -left(t, c);
    }
    d[t] = a(t, t);
  }
  return SnfResult{std::move(d), std::move(left), std::move(right)};
}

SnfResult snf(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "snf expects a square matrix");
  if (det(m) == 0) throw Error(ErrorKind::SingularMatrix, "snf: det = 0");
  return snf_general(m);
}

IntMatrix saturated_basis_extension(const std::vector<RatVector>& vs, std::size_t dim) {
  if (vs.empty()) return IntMatrix::identity(dim);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& v : vs) {
    if (v.size() != dim) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
    if (is_zero(v)) throw Error(ErrorKind::DependentInput, "zero vector in span basis");
    rows.push_back(primitive(v));
  }
  const auto a = IntMatrix::from_rows(rows);
  const auto s = snf_general(a);
  for (std::size_t t = 0; t < vs.size(); ++t)
    if (s.d[t] == 0) throw Error(ErrorKind::DependentInput, "vectors are linearly dependent");
  // a = left^-1 diag(d) right^-1, so the first r rows of right^-1 span the saturation.
  return inverse_unimodular(s.right).transpose();
}

std::vector<LatticeVector> saturate_span(const std::vector<RatVector>& vs, std::size_t dim) {
  const auto u = saturated_basis_extension(vs, dim);
  std::vector<LatticeVector> basis;
  for (std::size_t j = 0; j < vs.size(); ++j) basis.push_back(u.column(j));
  return basis;
}

}  // namespace shintani
