#include "ttg/matrix.hpp"

#include <utility>

#include "ttg/error.hpp"

namespace ttg {

Matrix Matrix::identity(const Component& ring, std::size_t n) { return scalar(ring, n, ring.one()); }

Matrix Matrix::scalar(const Component& ring, std::size_t n, const Scalar& s) {
  Matrix m = zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Matrix multiply(const Component& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out = Matrix::zero(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (ring.is_zero(b(k, j))) continue;
        out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix add(const Component& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.add(a(i, j), b(i, j));
  return out;
}

Matrix subtract(const Component& ring, const Matrix& a, const Matrix& b) { return add(ring, a, negate(ring, b)); }

Matrix negate(const Component& ring, const Matrix& a) {
  return transform(a, [&](const Scalar& x) { return ring.neg(x); });
}

Matrix scale(const Component& ring, const Scalar& s, const Matrix& a) {
  return transform(a, [&](const Scalar& x) { return ring.mul(s, x); });
}

bool is_zero(const Component& ring, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.is_zero(a(i, j))) return false;
  return true;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("hstack row mismatch");
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Matrix out(a.rows(), a.cols() + b.cols(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidArgument("vstack column mismatch");
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix out(a.rows() + b.rows(), a.cols(), a(0, 0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

Matrix block_diagonal(const Component& ring, const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::zero(ring, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix kronecker(const Component& ring, const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::zero(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
    }
  return out;
}

Matrix submatrix(const Matrix& a, std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) {
  if (row0 + rows > a.rows() || col0 + cols > a.cols()) throw InvalidArgument("submatrix out of range");
  if (rows == 0 || cols == 0) {
    Matrix out;
    return rows == 0 && cols == 0 ? out : Matrix(rows, cols, Scalar{});
  }
  Matrix out(rows, cols, a(row0, col0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(row0 + i, col0 + j);
  return out;
}

Matrix transform(const Matrix& a, const std::function<Scalar(const Scalar&)>& f) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
  return out;
}

}  // namespace ttg
