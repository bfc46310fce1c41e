#pragma once

#include <map>
#include <vector>

#include "incidence/poset.hpp"
#include "incidence/scalar.hpp"

namespace incidence {

/// A level-preserving bijection theta of B = {e_xy : x < y}, stored by strict-pair index.
class BasisBijection {
public:
  /// Throws InvalidArgument unless `image` is a permutation that preserves interval length.
  BasisBijection(PosetPtr poset, std::vector<int> image);

  static BasisBijection identity(PosetPtr poset);
  static BasisBijection from_pairs(PosetPtr poset, const std::map<ElementPair, ElementPair> &mapping);

  const FinitePoset &poset() const { return *poset_; }
  const PosetPtr &poset_ptr() const { return poset_; }
  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<int> &images() const { return image_; }

  ElementPair operator()(Element x, Element y) const;
  ElementPair operator()(ElementPair p) const { return (*this)(p.first, p.second); }
  /// The unique e_vw with theta(e_vw) = e_xy.
  ElementPair preimage(Element x, Element y) const;

  BasisBijection inverse() const;

  friend bool operator==(const BasisBijection &a, const BasisBijection &b) { return a.image_ == b.image_; }
  friend bool operator<(const BasisBijection &a, const BasisBijection &b) { return a.image_ < b.image_; }

private:
  PosetPtr poset_;
  std::vector<int> image_;
  std::vector<int> preimage_;
};

/// sigma : X^2_< -> K*, stored by strict-pair index.
class SigmaMap {
public:
  /// Throws InvalidArgument on a zero value or a size mismatch.
  SigmaMap(PosetPtr poset, std::vector<Scalar> values);
  static SigmaMap constant(PosetPtr poset, const Scalar &value);

  const Scalar &operator()(Element x, Element y) const;
  const std::vector<Scalar> &values() const { return values_; }
  const FinitePoset &poset() const { return *poset_; }

  friend bool operator==(const SigmaMap &a, const SigmaMap &b) { return a.values_ == b.values_; }

private:
  PosetPtr poset_;
  std::vector<Scalar> values_;
};

/// (theta, sigma, c); c is indexed by file element order.
struct ElementaryTriple {
  BasisBijection theta;
  SigmaMap sigma;
  std::vector<Scalar> c;

  friend bool operator==(const ElementaryTriple &, const ElementaryTriple &) = default;
};

} // namespace incidence
