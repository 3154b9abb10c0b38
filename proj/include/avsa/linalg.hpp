#pragma once

#include <cstddef>
#include <vector>

#include "avsa/field.hpp"

namespace avsa {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over Q(w).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const FieldElem& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const FieldElem& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const FieldElem& a, const Vector& x);  // y += a*x

/// Result of reducing a matrix to reduced row echelon form. Pivots are the
/// leftmost nonzero column of each row; rows appear in pivot order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column in increasing column
/// order, with 1 at its free column and 0 at every other free column.
std::vector<Vector> nullspace(const Matrix& m);

/// Basis of ker(M - mu I) for square M.
std::vector<Vector> fixed_space(const Matrix& m, const FieldElem& mu);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Echelon basis of the span of the given vectors (all of length n).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n);

/// Incrementally maintained echelon basis; insert() reports whether the vector
/// was independent of everything inserted before.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}
  bool insert(Vector v);
  /// Residue of v after reduction against the basis (zero iff v is in the span).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vector>& vectors() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace avsa
