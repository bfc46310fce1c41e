#pragma once

#include <istream>
#include <string>
#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/linalg.hpp"

namespace incidence {

/// A K-linear self-map of I(X,K), given by the images of the standard basis.
class LinearMap {
public:
  LinearMap(AlgebraPtr algebra, std::vector<AlgebraElement> images);

  static LinearMap identity(const AlgebraPtr &algebra);
  static LinearMap zero(const AlgebraPtr &algebra);
  /// Column j of `m` holds the coordinates of the image of basis vector j.
  static LinearMap from_matrix(const AlgebraPtr &algebra, const Matrix &m);

  const AlgebraPtr &algebra() const { return algebra_; }
  const AlgebraElement &image(int index) const { return images_.at(index); }
  const AlgebraElement &image(Element x, Element y) const;
  const std::vector<AlgebraElement> &images() const { return images_; }

  AlgebraElement apply(const AlgebraElement &f) const;
  AlgebraElement operator()(const AlgebraElement &f) const { return apply(f); }

  Matrix matrix() const;
  bool is_bijective() const;

  LinearMap &operator+=(const LinearMap &o);
  LinearMap &operator-=(const LinearMap &o);
  friend LinearMap operator+(LinearMap a, const LinearMap &b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap &b) { return a -= b; }
  LinearMap operator-() const;

  friend bool operator==(const LinearMap &a, const LinearMap &b);

private:
  AlgebraPtr algebra_;
  std::vector<AlgebraElement> images_;
};

/// outer o inner.
LinearMap compose(const LinearMap &outer, const LinearMap &inner);
/// Throws Singular when the map is not bijective.
LinearMap invert_map(const LinearMap &m);

/**
 * Map file: optional `map for <poset-file>` header, then one
 * `e(x,y) -> <combination>` line per basis vector, each exactly once.
 */
LinearMap parse_map(const AlgebraPtr &algebra, std::istream &in);
LinearMap parse_map_string(const AlgebraPtr &algebra, const std::string &text);
LinearMap load_map_file(const AlgebraPtr &algebra, const std::string &path);
/// Lines in canonical basis order; the header is omitted when `poset_name` is empty.
std::string format_map(const LinearMap &m, const std::string &poset_name);

} // namespace incidence
