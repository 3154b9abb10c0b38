#include "avsa/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace avsa {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const FieldElem& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElem& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector& axpy(Vector& y, const FieldElem& a, const Vector& x) {
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

Echelon rref(Matrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    FieldElem inv = m(r, c).inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      if (j != c) m(r, j) *= inv;
      support.push_back(j);
    }
    m(r, c) = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      FieldElem f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const std::size_t cols = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const FieldElem& x = e.reduced(i, f);
      if (!x.is_zero()) v[e.pivots[i]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> fixed_space(const Matrix& m, const FieldElem& mu) {
  if (m.rows() != m.cols()) throw std::invalid_argument("fixed_space needs a square matrix");
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= mu;
  return nullspace(shifted);
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  Echelon e = rref(Matrix::from_rows(vectors, n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    FieldElem f = v[pivots_[i]];
    if (f.is_zero()) continue;
    axpy(v, -f, rows_[i]);
  }
  return v;
}

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < n_ && v[p].is_zero()) ++p;
  if (p == n_) return false;
  FieldElem inv = v[p].inverse();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    FieldElem f = row[p];
    if (!f.is_zero()) axpy(row, -f, v);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace avsa
