#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "incidence/lie_maps.hpp"
#include "incidence/linear_map.hpp"
#include "incidence/theta.hpp"

namespace incidence {

struct ChainMonotonicity {
  enum class Kind { Increasing, Decreasing, NotMonotone };
  Kind kind = Kind::NotMonotone;
  /// The witnessing maximal chain D; empty when not monotone.
  Chain image;
};

/// Classifies theta on the maximal chain `chain`. Two-element chains report Increasing.
ChainMonotonicity chain_monotonicity(const BasisBijection &theta, const Chain &chain);
bool is_monotone_on_maximal_chains(const BasisBijection &theta);
bool is_monotone_on_maximal_chains(const BasisBijection &theta, const std::vector<Chain> &chains);

struct StCounters {
  int s_plus = 0, s_minus = 0, t_plus = 0, t_minus = 0;
  int balance() const { return s_plus - s_minus - t_plus + t_minus; }
  friend bool operator==(const StCounters &, const StCounters &) = default;
};

/// s+, s-, t+, t- of theta along the closed walk at z.
StCounters st_counters(const BasisBijection &theta, const Walk &closed, Element z);

/// The balance s+ - s- = t+ - t- on every cycle and every z.
bool is_admissible(const BasisBijection &theta);
bool is_admissible(const BasisBijection &theta, const std::vector<Cycle> &cycles);

/// +1 if theta(e_xz) = theta(e_xy)theta(e_yz), -1 if theta(e_xz) = theta(e_yz)theta(e_xy), else 0.
int transport_sign(const BasisBijection &theta, Element x, Element y, Element z);
bool is_compatible(const SigmaMap &sigma, const BasisBijection &theta);

/// Extends cover-pair seeds to a compatible sigma, shortest intervals first,
/// cross-checking every intermediate element. Seeds on longer pairs must agree.
SigmaMap complete_sigma(const BasisBijection &theta, const std::map<ElementPair, Scalar> &seed);

/// Change of tau(e_z) on the diagonal along the cover step from -> to: -1, 0 or 1.
int walk_increment(const BasisBijection &theta, Element from, Element to, Element z);

/// tau(e_z)(v,v) for every z, accumulated along `walk` from the first element to v.
std::vector<Scalar> diagonal_along_walk(const BasisBijection &theta, const std::vector<Scalar> &c,
                                        const Walk &walk);

struct BuildOptions {
  /// Recheck the diagonal difference law on every Hasse edge after construction.
  bool verify_walk_independence = false;
};

/// tau_{theta,sigma,c}: e_xy -> sigma(x,y) theta(e_xy), diagonal anchored at
/// the first element with tau(e_{x_i})(x_1,x_1) = c_i.
LinearMap build_tau(const AlgebraPtr &algebra, const ElementaryTriple &triple, BuildOptions options = {});

/// The unique triple with build_tau(triple) == m.
ElementaryTriple decompose_elementary(const LinearMap &m);

constexpr std::size_t default_theta_limit = 9;

/// Every admissible, level-preserving bijection of B monotone on maximal
/// chains, ascending. SearchSpaceTooLarge when |B| exceeds `limit`.
std::vector<BasisBijection> enumerate_theta(const PosetPtr &poset, std::size_t limit = default_theta_limit,
                                            bool parallel = true);

/// Whether complete_sigma succeeds from the all-ones cover seed.
bool sigma_completes_from_unit_seed(const BasisBijection &theta, const Field &field);

} // namespace incidence
