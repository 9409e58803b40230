#include "coxlat/exact/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace coxlat {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix rref(Matrix m) {
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    const Scalar inv = Scalar(1) / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
    }
    ++lead_row;
  }
  return m;
}

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    std::size_t c = 0;
    while (c < reduced.cols() && reduced(r, c).is_zero()) ++c;
    if (c == reduced.cols()) break;
    pivots.push_back(c);
  }
  return pivots;
}

Matrix drop_zero_rows(const Matrix& reduced, std::size_t keep) {
  Matrix out(0, reduced.cols());
  for (std::size_t r = 0; r < keep; ++r) out.append_row(reduced.row(r));
  return out;
}

}  // namespace

std::size_t rank(const Matrix& m) { return pivot_columns(rref(m)).size(); }

Matrix nullspace(const Matrix& m) {
  const Matrix reduced = rref(m);
  const auto pivots = pivot_columns(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix basis(0, m.cols());
  std::vector<Scalar> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.append_row(v);
  }
  return basis;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.ambient_dim_ = rows.cols();
  const Matrix reduced = rref(rows);
  s.basis_ = drop_zero_rows(reduced, pivot_columns(reduced).size());
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& vectors) {
  return span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::kernel(const Matrix& functionals) {
  if (functionals.rows() == 0) return full(functionals.cols());
  return span(nullspace(functionals));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector length mismatch");
  // Against an RREF basis, v is in the span iff subtracting v[pivot] times
  // each basis row clears v.
  std::vector<Scalar> rest(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (basis_(r, p).is_zero()) ++p;
    if (rest[p].is_zero()) continue;
    const Scalar f = rest[p];
    for (std::size_t c = p; c < ambient_dim_; ++c) rest[c] -= f * basis_(r, c);
  }
  for (const auto& x : rest)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Matrix Subspace::annihilator() const {
  if (dim() == 0) return Matrix::identity(ambient_dim_);
  return nullspace(basis_);
}

std::string Subspace::key() const {
  std::string k = std::to_string(ambient_dim_) + ":";
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      k += basis_(r, c).to_string();
      k += ',';
    }
    k += ';';
  }
  return k;
}

Subspace intersect_subspaces(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) {
    throw std::invalid_argument("intersect_subspaces: ambient dimension mismatch");
  }
  Matrix stacked = s1.annihilator();
  const Matrix a2 = s2.annihilator();
  for (std::size_t r = 0; r < a2.rows(); ++r) stacked.append_row(a2.row(r));
  return Subspace::kernel(stacked);
}

}  // namespace coxlat
