// SPDX-License-Identifier: Apache-2.0
#include "killing/linalg.hpp"

#include <utility>

#include "killing/errors.hpp"

namespace killing {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows_; ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_tensor(const Tensor& t) {
  if (t.order() != 2) throw InvalidArgument("matrix from a tensor of order != 2");
  Matrix m(t.dim(), t.dim());
  m.data_ = t.data();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Tensor Matrix::to_tensor() const {
  if (rows_ != cols_) throw InvalidArgument("only square matrices convert to order-2 tensors");
  Tensor t(rows_, 2);
  for (std::size_t k = 0; k < data_.size(); ++k) t[k] = data_[k];
  return t;
}

Vector Matrix::row(std::size_t i) const { return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)); }

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
  Vector r(a.rows_, Scalar(0));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  }
  return r;
}

namespace {

// Row-reduces m in place; returns the rank and the sign/scale bookkeeping
// needed for the determinant.
std::size_t eliminate(Matrix& m, Scalar* det) {
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
      if (det) *det = -*det;
    }
    const Scalar p = m(rank, col);
    if (det) *det *= p;
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      const Scalar f = m(i, col) / p;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(rank, j))) m(i, j) -= f * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  Scalar det;
  const std::size_t r = eliminate(m, &det);
  return r < m.rows() ? Scalar(0) : det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) throw InvalidArgument("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar bilinear(const Tensor& g, const Vector& a, const Vector& b) {
  const std::size_t n = g.dim();
  if (g.order() != 2 || a.size() != n || b.size() != n) throw InvalidArgument("bilinear form shape mismatch");
  Scalar acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& gij = g[i * n + j];
      if (!is_zero(gij)) acc += a[i] * gij * b[j];
    }
  }
  return acc;
}

}  // namespace killing
