#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "incidence/algebra.hpp"
#include "incidence/combination.hpp"
#include "incidence/elementary.hpp"
#include "incidence/error.hpp"
#include "incidence/lie_maps.hpp"
#include "incidence/linear_map.hpp"
#include "incidence/poset.hpp"
#include "incidence/theta.hpp"

namespace testing_support {

using namespace incidence;

inline PosetPtr make_poset(const std::vector<std::string> &labels,
                           const std::vector<std::pair<std::string, std::string>> &covers)
{
  return std::make_shared<const FinitePoset>(FinitePoset::from_cover_relations(labels, covers));
}

inline PosetPtr kite() { return make_poset({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"1", "4"}}); }
inline PosetPtr crown() { return make_poset({"1", "2", "3", "4"}, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}}); }
inline PosetPtr point() { return make_poset({"1"}, {}); }

inline PosetPtr chain(int n)
{
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 1)
      covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return make_poset(labels, covers);
}

inline Element el(const PosetPtr &p, const std::string &label) { return p->index_of(label); }

inline ElementPair pr(const PosetPtr &p, const std::string &x, const std::string &y)
{
  return {p->index_of(x), p->index_of(y)};
}

inline std::vector<BasisVector> basis_list(const PosetPtr &p,
                                           const std::vector<std::pair<std::string, std::string>> &pairs)
{
  std::vector<BasisVector> out;
  for (const auto &[x, y] : pairs)
    out.push_back(pr(p, x, y));
  return out;
}

inline AlgebraElement E(const AlgebraPtr &a, const std::string &text) { return parse_combination(a, text); }

/// The level-preserving map of the kite worked example.
inline const char *kite_phi_text =
    "e(1) -> -e(3) - e(4)\n"
    "e(1,2) -> e(2,3)\n"
    "e(1,3) -> -e(1,3)\n"
    "e(1,4) -> e(1,4)\n"
    "e(2) -> e(1) + e(3) + e(4)\n"
    "e(2,3) -> e(1,2)\n"
    "e(3) -> e(2) + e(3)\n"
    "e(4) -> e(4)\n";

inline LinearMap kite_phi(const AlgebraPtr &a) { return parse_map_string(a, kite_phi_text); }

inline BasisBijection kite_theta(const PosetPtr &p)
{
  return BasisBijection::from_pairs(p, {{pr(p, "1", "2"), pr(p, "2", "3")},
                                        {pr(p, "2", "3"), pr(p, "1", "2")},
                                        {pr(p, "1", "3"), pr(p, "1", "3")},
                                        {pr(p, "1", "4"), pr(p, "1", "4")}});
}

/// theta(e13) = e14, theta(e14) = e13, fixing e23 and e24.
inline BasisBijection crown_theta(const PosetPtr &p)
{
  return BasisBijection::from_pairs(p, {{pr(p, "1", "3"), pr(p, "1", "4")},
                                        {pr(p, "1", "4"), pr(p, "1", "3")},
                                        {pr(p, "2", "3"), pr(p, "2", "3")},
                                        {pr(p, "2", "4"), pr(p, "2", "4")}});
}

inline BasisBijection chain_flip(const PosetPtr &p)
{
  int n = p->size();
  std::map<ElementPair, ElementPair> m;
  for (auto [x, y] : p->strict_pairs())
    m[{x, y}] = {n - 1 - y, n - 1 - x};
  return BasisBijection::from_pairs(p, m);
}

inline std::vector<Scalar> scalars(const Field &f, const std::vector<long> &v)
{
  std::vector<Scalar> out;
  for (long x : v)
    out.emplace_back(f, x);
  return out;
}

inline SigmaMap kite_sigma(const PosetPtr &p, const Field &f)
{
  // strict pairs in canonical order: (1,2) (1,3) (1,4) (2,3)
  return SigmaMap(p, scalars(f, {1, -1, 1, 1}));
}

using Rng = std::mt19937_64;

inline Scalar random_scalar(const Field &f, Rng &rng, bool nonzero)
{
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  for (;;) {
    Scalar s = f.is_rational() ? Scalar(f, num(rng), den(rng)) : Scalar(f, num(rng));
    if (!nonzero || !s.is_zero())
      return s;
  }
}

inline AlgebraElement random_element(const AlgebraPtr &a, Rng &rng, double density = 0.6)
{
  std::bernoulli_distribution keep(density);
  AlgebraElement f(a);
  for (int i = 0; i < a->dim(); ++i)
    if (keep(rng))
      f.add_term(i, random_scalar(a->field(), rng, false));
  return f;
}

inline AlgebraElement random_radical(const AlgebraPtr &a, Rng &rng, double density = 0.6)
{
  AlgebraElement f = random_element(a, rng, density);
  return f.split_diagonal().second;
}

inline InnerUnit random_unit(const AlgebraPtr &a, Rng &rng)
{
  return InnerUnit(AlgebraElement::identity(a) + random_radical(a, rng));
}

inline std::vector<Scalar> random_anchor(const Field &f, int n, Rng &rng)
{
  for (;;) {
    std::vector<Scalar> c;
    Scalar sum = Scalar::zero(f);
    for (int i = 0; i < n; ++i) {
      c.push_back(random_scalar(f, rng, false));
      sum += c.back();
    }
    if (!sum.is_zero())
      return c;
  }
}

/// Random valid triple: theta drawn from the admissible candidates, sigma propagated from random
/// cover seeds (reseeding on conflicts), anchor values with nonzero sum.
inline ElementaryTriple random_triple(const AlgebraPtr &a, Rng &rng)
{
  const auto &poset = a->poset_ptr();
  auto thetas = enumerate_theta(poset, 12, false);
  std::uniform_int_distribution<std::size_t> pick(0, thetas.size() - 1);
  for (;;) {
    const BasisBijection &theta = thetas[pick(rng)];
    std::map<ElementPair, Scalar> seed;
    for (auto cover : poset->covers())
      seed.emplace(cover, random_scalar(a->field(), rng, true));
    try {
      SigmaMap sigma = complete_sigma(theta, seed);
      return {theta, sigma, random_anchor(a->field(), poset->size(), rng)};
    } catch (const Error &) {
    }
  }
}

} // namespace testing_support
