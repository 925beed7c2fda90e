// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "killing/scalar.hpp"
#include "killing/tensor.hpp"

namespace killing {

/// Small dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_tensor(const Tensor& t);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Tensor to_tensor() const;
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
/// Throws InvalidArgument when m is singular or not square.
Matrix inverse(const Matrix& m);

/// Bilinear form value a^T G b.
Scalar bilinear(const Tensor& g, const Vector& a, const Vector& b);

}  // namespace killing
