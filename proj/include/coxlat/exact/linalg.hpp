#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coxlat/exact/scalar.hpp"

namespace coxlat {

/// Row-major dense matrix of Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values);
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form, same shape as the input (zero rows last, unit
/// pivots).
Matrix rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of {x : m x = 0}, one basis vector per free column.
Matrix nullspace(const Matrix& m);
Scalar determinant(Matrix m);

/// A linear subspace of Scalar^ambient_dim, stored by the RREF of a basis
/// (no zero rows). Two subspaces are equal iff their stored bases agree
/// entry-wise.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of the given spanning rows.
  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& vectors);
  static Subspace full(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  /// {x : f x = 0 for every row f of functionals}.
  static Subspace kernel(const Matrix& functionals);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Basis of the annihilator: rows f with f . x = 0 for all x in the space.
  Matrix annihilator() const;

  /// Serialized canonical basis; equal keys iff equal subspaces.
  std::string key() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
};

/// Throws std::invalid_argument when the ambient dimensions differ.
Subspace intersect_subspaces(const Subspace& s1, const Subspace& s2);

}  // namespace coxlat
