#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "incidence/poset.hpp"
#include "incidence/scalar.hpp"

namespace incidence {

/// A standard basis vector e_xy, x <= y.
using BasisVector = ElementPair;

/// I(X,K): the poset and the field, plus basis bookkeeping.
class IncidenceAlgebra {
public:
  IncidenceAlgebra(PosetPtr poset, Field field);

  const FinitePoset &poset() const { return *poset_; }
  const PosetPtr &poset_ptr() const { return poset_; }
  const Field &field() const { return field_; }

  int dim() const { return static_cast<int>(poset_->pairs().size()); }
  BasisVector basis(int index) const { return poset_->pairs()[index]; }
  int index(Element x, Element y) const { return poset_->pair_index(x, y); }
  /// l of the interval of basis vector `index`, i.e. which L_i it lies in.
  int level(int index) const;
  /// First basis index whose row is x; rows are contiguous.
  int row_begin(Element x) const { return row_begin_[x]; }
  int row_end(Element x) const { return row_begin_[x + 1]; }

  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one() const { return Scalar::one(field_); }

  /// Throws PosetMismatch or FieldMismatch unless both describe the same algebra.
  void check_same(const IncidenceAlgebra &other) const;

private:
  PosetPtr poset_;
  Field field_;
  std::vector<int> level_;
  std::vector<int> row_begin_;
};

using AlgebraPtr = std::shared_ptr<const IncidenceAlgebra>;

AlgebraPtr make_algebra(PosetPtr poset, Field field);

/**
 * An element f of I(X,K), stored sparsely as basis index -> nonzero
 * coefficient.
 */
class AlgebraElement {
public:
  explicit AlgebraElement(AlgebraPtr algebra);

  static AlgebraElement basis(const AlgebraPtr &algebra, Element x, Element y);
  static AlgebraElement idempotent(const AlgebraPtr &algebra, Element x) { return basis(algebra, x, x); }
  /// The unit delta.
  static AlgebraElement identity(const AlgebraPtr &algebra);
  static AlgebraElement from_coordinates(const AlgebraPtr &algebra, const std::vector<Scalar> &coords);

  const AlgebraPtr &algebra() const { return algebra_; }
  const IncidenceAlgebra &context() const { return *algebra_; }

  Scalar coeff(Element x, Element y) const;
  Scalar coeff_at(int index) const;
  /// Adds `c` to the coefficient at `index`, dropping the term if it cancels.
  void add_term(int index, const Scalar &c);
  void set_term(int index, const Scalar &c);

  const std::map<int, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Scalar> coordinates() const;

  bool in_radical() const;
  bool is_diagonal() const;
  /// (f_D, f_J).
  std::pair<AlgebraElement, AlgebraElement> split_diagonal() const;
  /// Only the terms whose interval length equals `level`.
  AlgebraElement level_component(int level) const;

  AlgebraElement &operator+=(const AlgebraElement &o);
  AlgebraElement &operator-=(const AlgebraElement &o);
  AlgebraElement &operator*=(const Scalar &s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar &s) { return a *= s; }
  friend AlgebraElement operator*(const Scalar &s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement &a, const AlgebraElement &b);

private:
  AlgebraPtr algebra_;
  std::map<int, Scalar> terms_;
};

/// Convolution product.
AlgebraElement multiply(const AlgebraElement &f, const AlgebraElement &g);
inline AlgebraElement operator*(const AlgebraElement &f, const AlgebraElement &g) { return multiply(f, g); }
/// fg - gf.
AlgebraElement bracket(const AlgebraElement &f, const AlgebraElement &g);
/// Two-sided inverse; NotInvertible if some diagonal entry vanishes.
AlgebraElement invert(const AlgebraElement &f);

/// e_xy with l >= m, canonical order. m = 1 gives B.
std::vector<BasisVector> radical_power_basis(const FinitePoset &p, int m);
/// e_xy with l == i; L_0 is the diagonal.
std::vector<BasisVector> level_basis(const FinitePoset &p, int i);
/// e_xy with x < y, x minimal and y maximal.
std::vector<BasisVector> center_of_radical(const FinitePoset &p);
/// Basis of the two-sided ideal generated by S; every member of S must lie in the radical.
std::vector<BasisVector> ideal_generated(const AlgebraPtr &algebra, const std::vector<AlgebraElement> &S);

} // namespace incidence
