#pragma once

#include <vector>

#include "incidence/scalar.hpp"

namespace incidence {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over an exact field; elimination pivots on the
/// first nonzero entry, no tolerances.
class Matrix {
public:
  Matrix(Field field, int rows, int cols);
  static Matrix identity(Field field, int n);
  static Matrix from_rows(Field field, int cols, const std::vector<Vector> &rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field &field() const { return field_; }

  Scalar &operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(int r, int c) const { return data_[r * cols_ + c]; }
  Vector row(int r) const;

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> reduce();
  int rank() const;
  /// Throws Singular when not square or not full rank.
  Matrix inverse() const;
  /// Basis of {v : M v = 0}.
  std::vector<Vector> null_space() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// A subspace of K^n kept as the nonzero rows of a reduced echelon form.
class Subspace {
public:
  Subspace(Field field, int ambient_dim);
  Subspace(Field field, int ambient_dim, const std::vector<Vector> &spanning);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return n_; }
  const std::vector<Vector> &basis() const { return basis_; }

  /// Returns true when v was not already contained.
  bool add(const Vector &v);
  bool contains(const Vector &v) const;

  friend bool operator==(const Subspace &a, const Subspace &b)
  {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

private:
  Vector reduce_against(Vector v) const;

  Field field_;
  int n_;
  std::vector<Vector> basis_; // sorted by pivot, fully reduced
  std::vector<int> pivots_;
};

} // namespace incidence
