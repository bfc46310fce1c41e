#pragma once

#include <cstddef>
#include <vector>

#include "incidence/linear_map.hpp"
#include "incidence/theta.hpp"

namespace incidence {

/// Which product a map is tested against on pairs of basis vectors.
enum class ProductLaw {
  Bracket,         ///< m([a,b]) = [m(a), m(b)]
  Product,         ///< m(ab) = m(a) m(b)
  ReversedProduct, ///< m(ab) = m(b) m(a)
};

/// Number of ordered basis pairs (a,b) on which `law` fails. Serial reference.
std::size_t count_law_violations_serial(const LinearMap &m, ProductLaw law);
/// Same count, basis pairs split across OpenMP threads.
std::size_t count_law_violations_parallel(const LinearMap &m, ProductLaw law);

/// Admissible, level-preserving bijections of B that are monotone on maximal
/// chains, ascending by image vector. Serial reference: nested next_permutation.
std::vector<BasisBijection> enumerate_theta_serial(const PosetPtr &poset);
/// Same set; candidates are unranked from a flat index range and filtered in parallel.
std::vector<BasisBijection> enumerate_theta_parallel(const PosetPtr &poset);

/// Number of level-preserving bijections of B (the raw search space).
std::size_t theta_search_space(const FinitePoset &p);

/// Thread count for the parallel kernels; 0 keeps the OpenMP default.
void set_parallel_jobs(int jobs);

} // namespace incidence
