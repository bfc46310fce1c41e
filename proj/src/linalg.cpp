#include "incidence/linalg.hpp"

#include <algorithm>

#include "incidence/error.hpp"

namespace incidence {

Matrix::Matrix(Field field, int rows, int cols)
  : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Scalar(field))
{}

Matrix Matrix::identity(Field field, int n)
{
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(Field field, int cols, const std::vector<Vector> &rows)
{
  Matrix m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(int r) const
{
  return Vector(data_.begin() + static_cast<long>(r) * cols_, data_.begin() + static_cast<long>(r + 1) * cols_);
}

std::vector<int> Matrix::reduce()
{
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < cols_ && pr < rows_; ++c) {
    int sel = -1;
    for (int r = pr; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0)
      continue;
    if (sel != pr)
      for (int k = 0; k < cols_; ++k)
        std::swap((*this)(sel, k), (*this)(pr, k));
    Scalar inv = (*this)(pr, c).inverse();
    for (int k = c; k < cols_; ++k)
      (*this)(pr, k) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr || (*this)(r, c).is_zero())
        continue;
      Scalar factor = (*this)(r, c);
      for (int k = c; k < cols_; ++k)
        (*this)(r, k) -= factor * (*this)(pr, k);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

int Matrix::rank() const
{
  Matrix copy(*this);
  return static_cast<int>(copy.reduce().size());
}

Matrix Matrix::inverse() const
{
  if (rows_ != cols_)
    throw Error(ErrorKind::Singular, "non-square matrix");
  const int n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Scalar::one(field_);
  }
  auto piv = aug.reduce();
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  Matrix inv(field_, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Vector> Matrix::null_space() const
{
  Matrix m(*this);
  auto piv = m.reduce();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : piv)
    is_pivot[c] = 1;
  std::vector<Vector> out;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    Vector v(cols_, Scalar(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -m(static_cast<int>(r), free);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(Field field, int ambient_dim) : field_(field), n_(ambient_dim) {}

Subspace::Subspace(Field field, int ambient_dim, const std::vector<Vector> &spanning)
  : Subspace(field, ambient_dim)
{
  for (const auto &v : spanning)
    add(v);
}

Vector Subspace::reduce_against(Vector v) const
{
  if (static_cast<int>(v.size()) != n_)
    throw Error(ErrorKind::InvalidArgument, "vector has wrong dimension");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = v[pivots_[k]];
    if (f.is_zero())
      continue;
    for (int c = pivots_[k]; c < n_; ++c)
      v[c] -= f * basis_[k][c];
  }
  return v;
}

bool Subspace::contains(const Vector &v) const
{
  auto r = reduce_against(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar &s) { return s.is_zero(); });
}

bool Subspace::add(const Vector &v)
{
  auto r = reduce_against(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Scalar &s) { return !s.is_zero(); });
  if (it == r.end())
    return false;
  int pivot = static_cast<int>(it - r.begin());
  Scalar inv = r[pivot].inverse();
  for (int c = pivot; c < n_; ++c)
    r[c] *= inv;
  // Keep the basis fully reduced so equal subspaces have equal bases.
  for (auto &b : basis_) {
    Scalar f = b[pivot];
    if (f.is_zero())
      continue;
    for (int c = pivot; c < n_; ++c)
      b[c] -= f * r[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

} // namespace incidence
