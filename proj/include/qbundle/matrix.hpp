#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/scalar.hpp"

namespace qb {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals. Zero-row and zero-column
/// shapes are legal and keep their other extent.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose rows are `rows`; `cols` fixes the width when
  /// `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row_vector(std::size_t r) const;
  Vector col_vector(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; row (i,k) -> i*b.rows()+k, column (j,l) -> j*b.cols()+l.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);

struct Echelon {
  Matrix reduced;                    // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
};

/// Gauss-Jordan elimination to reduced row-echelon form.
Echelon echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// A particular solution of a*x = b with every free variable set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector kron(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);
bool is_zero(const Vector& v);

std::string to_string(const Matrix& m);

}  // namespace qb
