#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ttg/component.hpp"

namespace ttg {

/// Dense row-major matrix of Scalars. Arithmetic takes the Component that
/// the entries belong to.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zero(const Component& ring, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, ring.zero());
  }
  static Matrix identity(const Component& ring, std::size_t n);
  static Matrix scalar(const Component& ring, std::size_t n, const Scalar& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Component& ring, const Matrix& a, const Matrix& b);
Matrix add(const Component& ring, const Matrix& a, const Matrix& b);
Matrix subtract(const Component& ring, const Matrix& a, const Matrix& b);
Matrix negate(const Component& ring, const Matrix& a);
Matrix scale(const Component& ring, const Scalar& s, const Matrix& a);
bool is_zero(const Component& ring, const Matrix& a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Component& ring, const Matrix& a, const Matrix& b);
/// (A kron B)(i*rb + k, j*cb + l) = A(i,j) * B(k,l).
Matrix kronecker(const Component& ring, const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& a, std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols);
Matrix transform(const Matrix& a, const std::function<Scalar(const Scalar&)>& f);

}  // namespace ttg
