#include "incidence/kernels.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "incidence/elementary.hpp"

namespace incidence {

namespace {

/// m applied to the product of basis vectors a and b under `law`, minus the
/// same product of the images. Zero iff the law holds on (a, b).
bool law_holds(const LinearMap &m, ProductLaw law, int a, int b)
{
  const auto &alg = *m.algebra();
  auto [x, y] = alg.basis(a);
  auto [u, v] = alg.basis(b);
  AlgebraElement lhs(m.algebra());
  if (y == u)
    lhs += m.image(alg.index(x, v));
  if (law == ProductLaw::Bracket && v == x)
    lhs -= m.image(alg.index(u, y));

  const auto &ma = m.image(a);
  const auto &mb = m.image(b);
  switch (law) {
  case ProductLaw::Bracket: return lhs == bracket(ma, mb);
  case ProductLaw::Product: return lhs == multiply(ma, mb);
  case ProductLaw::ReversedProduct: return lhs == multiply(mb, ma);
  }
  return false;
}

std::size_t factorial(std::size_t k)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i)
    f *= i;
  return f;
}

/// B grouped by level: groups[i] lists the strict indices in L_i, ascending.
std::vector<std::vector<int>> level_groups(const FinitePoset &p)
{
  std::vector<std::vector<int>> groups;
  const auto &strict = p.strict_pairs();
  for (int k = 0; k < static_cast<int>(strict.size()); ++k) {
    int lvl = p.interval_length(strict[k].first, strict[k].second);
    if (static_cast<int>(groups.size()) <= lvl)
      groups.resize(lvl + 1);
    groups[lvl].push_back(k);
  }
  groups.erase(std::remove_if(groups.begin(), groups.end(), [](const auto &g) { return g.empty(); }),
               groups.end());
  return groups;
}

/// Lehmer-code unranking of a permutation of {0..k-1}.
std::vector<int> unrank_permutation(std::size_t rank, int k)
{
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(k);
  for (int i = k; i > 0; --i) {
    std::size_t f = factorial(i - 1);
    std::size_t pos = rank / f;
    rank %= f;
    out.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<long>(pos));
  }
  return out;
}

struct ThetaFilter {
  std::vector<Chain> chains;
  std::vector<Cycle> cycles;

  explicit ThetaFilter(const FinitePoset &p) : chains(p.maximal_chains()), cycles(p.enumerate_cycles()) {}

  bool accept(const BasisBijection &theta) const
  {
    return is_monotone_on_maximal_chains(theta, chains) && is_admissible(theta, cycles);
  }
};

} // namespace

std::size_t count_law_violations_serial(const LinearMap &m, ProductLaw law)
{
  const int n = m.algebra()->dim();
  std::size_t bad = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!law_holds(m, law, a, b))
        ++bad;
  return bad;
}

std::size_t count_law_violations_parallel(const LinearMap &m, ProductLaw law)
{
  const long n = m.algebra()->dim();
  std::size_t bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad)
  for (long k = 0; k < n * n; ++k)
    if (!law_holds(m, law, static_cast<int>(k / n), static_cast<int>(k % n)))
      ++bad;
  return bad;
}

std::size_t theta_search_space(const FinitePoset &p)
{
  std::size_t total = 1;
  for (const auto &g : level_groups(p))
    total *= factorial(g.size());
  return total;
}

std::vector<BasisBijection> enumerate_theta_serial(const PosetPtr &poset)
{
  auto groups = level_groups(*poset);
  const ThetaFilter filter(*poset);
  std::vector<BasisBijection> out;
  std::vector<int> image(poset->strict_pairs().size());
  std::vector<std::vector<int>> perms;
  for (const auto &g : groups)
    perms.push_back(g);

  // Odometer over the per-level permutations, each advanced by next_permutation.
  while (true) {
    for (std::size_t l = 0; l < groups.size(); ++l)
      for (std::size_t i = 0; i < groups[l].size(); ++i)
        image[groups[l][i]] = perms[l][i];
    BasisBijection theta(poset, image);
    if (filter.accept(theta))
      out.push_back(std::move(theta));

    std::size_t l = 0;
    for (; l < perms.size(); ++l) {
      if (std::next_permutation(perms[l].begin(), perms[l].end()))
        break;
      // next_permutation wrapped around to sorted order; carry into the next level.
    }
    if (l == perms.size())
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisBijection> enumerate_theta_parallel(const PosetPtr &poset)
{
  auto groups = level_groups(*poset);
  const std::size_t total = theta_search_space(*poset);
  const std::size_t nb = poset->strict_pairs().size();
  const ThetaFilter filter(*poset);

  std::vector<std::vector<BasisBijection>> found(omp_get_max_threads());
#pragma omp parallel
  {
    auto &local = found[omp_get_thread_num()];
    std::vector<int> image(nb);
#pragma omp for schedule(dynamic, 64)
    for (long r = 0; r < static_cast<long>(total); ++r) {
      std::size_t rank = static_cast<std::size_t>(r);
      for (const auto &g : groups) {
        std::size_t f = factorial(g.size());
        auto perm = unrank_permutation(rank % f, static_cast<int>(g.size()));
        rank /= f;
        for (std::size_t i = 0; i < g.size(); ++i)
          image[g[i]] = g[perm[i]];
      }
      BasisBijection theta(poset, image);
      if (filter.accept(theta))
        local.push_back(std::move(theta));
    }
  }

  std::vector<BasisBijection> out;
  for (auto &v : found)
    for (auto &t : v)
      out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

void set_parallel_jobs(int jobs)
{
  if (jobs > 0)
    omp_set_num_threads(jobs);
}

} // namespace incidence
