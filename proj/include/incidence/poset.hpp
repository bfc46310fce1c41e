#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace incidence {

/// Element index into FinitePoset::labels(), i.e. file order.
using Element = int;
using ElementPair = std::pair<Element, Element>;
using Chain = std::vector<Element>;

/// A sequence of elements in which consecutive entries form a cover pair in
/// one direction or the other.
struct Walk {
  std::vector<Element> vertices;

  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Walk &, const Walk &) = default;
};

/// A closed walk of length >= 4 that repeats no vertex except its endpoints.
struct Cycle {
  std::vector<Element> vertices;

  Walk as_walk() const { return Walk{vertices}; }
  Cycle reversed() const { return Cycle{{vertices.rbegin(), vertices.rend()}}; }
  friend bool operator==(const Cycle &, const Cycle &) = default;
};

/**
 * A finite connected poset given by its Hasse diagram.
 *
 * Besides the order relation the poset fixes two canonical enumerations that
 * the rest of the library indexes by: all comparable pairs x <= y, and the
 * strict pairs x < y, both sorted by (index of x, index of y).
 */
class FinitePoset {
public:
  /// Validates the cover list: no directed cycles, no transitively implied
  /// pair, connected, distinct labels.
  static FinitePoset from_cover_relations(const std::vector<std::string> &labels,
                                          const std::vector<std::pair<std::string, std::string>> &covers);
  static FinitePoset from_cover_indices(std::vector<std::string> labels,
                                        const std::vector<ElementPair> &covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(Element x) const { return labels_.at(x); }
  Element index_of(const std::string &label) const;

  bool leq(Element x, Element y) const { return leq_[x * size() + y]; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  bool is_cover(Element x, Element y) const { return interval_length(x, y) == 1; }
  /// l of the closed interval from x to y, or -1 when x is not below y.
  int interval_length(Element x, Element y) const { return length_[x * size() + y]; }

  /// Cover pairs sorted canonically.
  const std::vector<ElementPair> &covers() const { return covers_; }
  /// Neighbors in the undirected Hasse diagram, ascending.
  const std::vector<Element> &neighbors(Element x) const { return neighbors_[x]; }
  bool is_minimal(Element x) const;
  bool is_maximal(Element x) const;

  /// All pairs x <= y in canonical order (the standard basis of I(X,K)).
  const std::vector<ElementPair> &pairs() const { return pairs_; }
  /// Index into pairs(), or -1 when x is not below y.
  int pair_index(Element x, Element y) const { return pair_index_[x * size() + y]; }
  /// Strict pairs x < y in canonical order (the basis B of the radical).
  const std::vector<ElementPair> &strict_pairs() const { return strict_; }
  int strict_index(Element x, Element y) const { return strict_index_[x * size() + y]; }

  /// Max over chains C inside `subset` of |C| - 1.
  int length(const std::vector<Element> &subset) const;
  /// The closed interval from x to y in ascending element order; empty if x is not below y.
  std::vector<Element> interval(Element x, Element y) const;
  /// Longest chain length of the whole poset.
  int height() const;

  /// Saturated chains from a minimal to a maximal element, sorted lexicographically.
  std::vector<Chain> maximal_chains() const;
  bool is_maximal_chain(const Chain &c) const;

  /// Every cycle once, as the least rotation of the lexicographically smaller orientation.
  std::vector<Cycle> enumerate_cycles() const;
  /// True when the undirected Hasse diagram is a tree.
  bool is_tree() const;

  /// Breadth-first walk in the undirected cover graph, neighbors visited in ascending order.
  Walk walk_between(Element from, Element to) const;
  bool is_walk(const Walk &w) const;

  /// Exhaustive search for a bijection reversing the order.
  bool self_anti_isomorphism_exists() const;

  friend bool operator==(const FinitePoset &a, const FinitePoset &b)
  {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

private:
  FinitePoset() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  std::vector<char> leq_;
  std::vector<int> length_;
  std::vector<ElementPair> covers_;
  std::vector<std::vector<Element>> neighbors_;
  std::vector<ElementPair> pairs_;
  std::vector<int> pair_index_;
  std::vector<ElementPair> strict_;
  std::vector<int> strict_index_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

} // namespace incidence
