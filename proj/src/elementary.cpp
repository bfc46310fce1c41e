#include "incidence/elementary.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "incidence/error.hpp"
#include "incidence/kernels.hpp"

namespace incidence {

namespace {

bool matches(const BasisBijection &theta, const Chain &c, const Chain &d, bool decreasing)
{
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ElementPair want = decreasing ? ElementPair{d[m - 1 - j], d[m - 1 - i]} : ElementPair{d[i], d[j]};
      if (theta(c[i], c[j]) != want)
        return false;
    }
  return true;
}

} // namespace

ChainMonotonicity chain_monotonicity(const BasisBijection &theta, const Chain &chain)
{
  const auto &p = theta.poset();
  if (!p.is_maximal_chain(chain))
    throw Error(ErrorKind::NotMaximalChain, "not a saturated chain from a minimal to a maximal element");

  using Kind = ChainMonotonicity::Kind;
  const std::size_t m = chain.size();
  if (m == 1)
    return {Kind::Increasing, chain};

  // Increasing: theta(e_{u1 uj}) = e_{v1 vj}.
  Chain up(m);
  up[0] = theta(chain[0], chain[1]).first;
  for (std::size_t j = 1; j < m; ++j)
    up[j] = theta(chain[0], chain[j]).second;
  if (matches(theta, chain, up, false) && p.is_maximal_chain(up))
    return {Kind::Increasing, up};

  // Decreasing: theta(e_{u1 uj}) = e_{v_{m-j+1} v_m}.
  Chain down(m);
  down[m - 1] = theta(chain[0], chain[1]).second;
  for (std::size_t j = 1; j < m; ++j)
    down[m - 1 - j] = theta(chain[0], chain[j]).first;
  if (matches(theta, chain, down, true) && p.is_maximal_chain(down))
    return {Kind::Decreasing, down};

  return {Kind::NotMonotone, {}};
}

bool is_monotone_on_maximal_chains(const BasisBijection &theta, const std::vector<Chain> &chains)
{
  return std::all_of(chains.begin(), chains.end(), [&](const Chain &c) {
    return chain_monotonicity(theta, c).kind != ChainMonotonicity::Kind::NotMonotone;
  });
}

bool is_monotone_on_maximal_chains(const BasisBijection &theta)
{
  return is_monotone_on_maximal_chains(theta, theta.poset().maximal_chains());
}

StCounters st_counters(const BasisBijection &theta, const Walk &closed, Element z)
{
  const auto &p = theta.poset();
  if (!p.is_walk(closed))
    throw Error(ErrorKind::NotAWalkStep, "consecutive vertices must form cover pairs");
  if (!closed.closed())
    throw Error(ErrorKind::NotClosed, "walk does not return to its start");

  StCounters s;
  const auto &v = closed.vertices;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (p.less(v[i], v[i + 1])) {
      auto [lo, hi] = theta.preimage(v[i], v[i + 1]);
      s.s_plus += lo == z;
      s.t_plus += hi == z;
    } else {
      auto [lo, hi] = theta.preimage(v[i + 1], v[i]);
      s.s_minus += lo == z;
      s.t_minus += hi == z;
    }
  }
  return s;
}

bool is_admissible(const BasisBijection &theta, const std::vector<Cycle> &cycles)
{
  const auto &p = theta.poset();
  if (p.is_tree())
    return true;
  for (const auto &cycle : cycles)
    for (const auto &oriented : {cycle, cycle.reversed()})
      for (Element z = 0; z < p.size(); ++z)
        if (st_counters(theta, oriented.as_walk(), z).balance() != 0)
          return false;
  return true;
}

bool is_admissible(const BasisBijection &theta)
{
  return is_admissible(theta, theta.poset().enumerate_cycles());
}

int transport_sign(const BasisBijection &theta, Element x, Element y, Element z)
{
  auto a = theta(x, y), b = theta(y, z), c = theta(x, z);
  if (a.second == b.first && c == ElementPair{a.first, b.second})
    return 1;
  if (b.second == a.first && c == ElementPair{b.first, a.second})
    return -1;
  return 0;
}

bool is_compatible(const SigmaMap &sigma, const BasisBijection &theta)
{
  const auto &p = theta.poset();
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.less(x, y))
        continue;
      for (Element z = 0; z < n; ++z) {
        if (!p.less(y, z))
          continue;
        int s = transport_sign(theta, x, y, z);
        if (s == 0)
          continue;
        Scalar want = sigma(x, y) * sigma(y, z);
        if (!(sigma(x, z) == (s > 0 ? want : -want)))
          return false;
      }
    }
  return true;
}

SigmaMap complete_sigma(const BasisBijection &theta, const std::map<ElementPair, Scalar> &seed)
{
  const auto &p = theta.poset();
  if (!is_monotone_on_maximal_chains(theta))
    throw Error(ErrorKind::NotMonotone, "sigma completion needs theta monotone on maximal chains");
  const auto &strict = p.strict_pairs();
  auto name = [&](Element a, Element b) { return "(" + p.label(a) + "," + p.label(b) + ")"; };

  for (const auto &[pair, value] : seed) {
    if (p.strict_index(pair.first, pair.second) < 0)
      throw Error(ErrorKind::InvalidArgument, "seed on a pair that is not strictly ordered");
    if (value.is_zero())
      throw Error(ErrorKind::InvalidArgument, "seed sigma" + name(pair.first, pair.second) + " is zero");
  }

  std::vector<int> order(strict.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.interval_length(strict[a].first, strict[a].second) <
           p.interval_length(strict[b].first, strict[b].second);
  });

  std::vector<std::optional<Scalar>> values(strict.size());
  for (int k : order) {
    auto [x, z] = strict[k];
    auto seeded = seed.find({x, z});
    if (p.is_cover(x, z)) {
      if (seeded == seed.end())
        throw Error(ErrorKind::MissingSeed, "no seed for cover pair " + name(x, z));
      values[k] = seeded->second;
      continue;
    }
    std::optional<Scalar> forced;
    Element forced_by = -1;
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(x, y) || !p.less(y, z))
        continue;
      int s = transport_sign(theta, x, y, z);
      if (s == 0)
        continue;
      Scalar v = *values[p.strict_index(x, y)] * *values[p.strict_index(y, z)];
      if (s < 0)
        v = -v;
      if (!forced) {
        forced = v;
        forced_by = y;
      } else if (!(*forced == v)) {
        throw Error(ErrorKind::Conflict, "sigma" + name(x, z) + " forced to " + forced->to_string() + " via " +
                                           p.label(forced_by) + " but " + v.to_string() + " via " + p.label(y));
      }
    }
    if (!forced)
      throw Error(ErrorKind::NotMonotone, "no intermediate element determines sigma" + name(x, z));
    if (seeded != seed.end() && !(seeded->second == *forced))
      throw Error(ErrorKind::Conflict, "seed sigma" + name(x, z) + " = " + seeded->second.to_string() +
                                         " disagrees with forced value " + forced->to_string());
    values[k] = forced;
  }

  std::vector<Scalar> out;
  for (auto &v : values)
    out.push_back(*v);
  return SigmaMap(theta.poset_ptr(), std::move(out));
}

int walk_increment(const BasisBijection &theta, Element from, Element to, Element z)
{
  const auto &p = theta.poset();
  if (p.is_cover(from, to)) {
    auto [v, w] = theta.preimage(from, to);
    return z == v ? -1 : z == w ? 1 : 0;
  }
  if (p.is_cover(to, from)) {
    auto [v, w] = theta.preimage(to, from);
    return z == w ? -1 : z == v ? 1 : 0;
  }
  throw Error(ErrorKind::NotAWalkStep, p.label(from) + " and " + p.label(to) + " are not a cover pair");
}

std::vector<Scalar> diagonal_along_walk(const BasisBijection &theta, const std::vector<Scalar> &c,
                                        const Walk &walk)
{
  const auto &p = theta.poset();
  if (static_cast<int>(c.size()) != p.size())
    throw Error(ErrorKind::InvalidArgument, "c needs one entry per element");
  if (walk.vertices.empty() || walk.vertices.front() != 0)
    throw Error(ErrorKind::InvalidArgument, "diagonal walks start at the first element");
  std::vector<Scalar> out(c);
  const auto &v = walk.vertices;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    for (Element z = 0; z < p.size(); ++z)
      if (int d = walk_increment(theta, v[i], v[i + 1], z))
        out[z] += Scalar(c[z].field(), d);
  return out;
}

LinearMap build_tau(const AlgebraPtr &algebra, const ElementaryTriple &triple, BuildOptions options)
{
  const auto &p = algebra->poset();
  const auto &theta = triple.theta;
  if (!(theta.poset() == p))
    throw Error(ErrorKind::PosetMismatch, "theta is defined on a different poset");
  if (static_cast<int>(triple.c.size()) != p.size())
    throw Error(ErrorKind::InvalidArgument, "c needs one entry per element");

  Scalar trace = algebra->zero();
  for (const auto &ci : triple.c)
    trace += ci;
  for (const auto &s : triple.sigma.values())
    if (!(s.field() == algebra->field()))
      throw Error(ErrorKind::FieldMismatch, "sigma over " + s.field().name());

  if (!is_monotone_on_maximal_chains(theta))
    throw Error(ErrorKind::NotMonotone, "theta is not monotone on maximal chains");
  if (!is_admissible(theta))
    throw Error(ErrorKind::NotAdmissible, "theta violates the cycle balance");
  if (!is_compatible(triple.sigma, theta))
    throw Error(ErrorKind::NotCompatible, "sigma is not compatible with theta");
  if (trace.is_zero())
    throw Error(ErrorKind::ZeroTrace, "the entries of c sum to zero");

  std::vector<AlgebraElement> images(algebra->dim(), AlgebraElement(algebra));
  for (auto [x, y] : p.strict_pairs()) {
    auto [u, v] = theta(x, y);
    images[algebra->index(x, y)] = AlgebraElement::basis(algebra, u, v) * triple.sigma(x, y);
  }
  for (Element v = 0; v < p.size(); ++v) {
    auto diag = diagonal_along_walk(theta, triple.c, p.walk_between(0, v));
    for (Element z = 0; z < p.size(); ++z)
      images[algebra->index(z, z)].add_term(algebra->index(v, v), diag[z]);
  }

  if (options.verify_walk_independence) {
    // Walk independence holds iff every Hasse edge reproduces its own increment.
    for (auto [lo, hi] : p.covers())
      for (Element z = 0; z < p.size(); ++z) {
        const auto &img = images[algebra->index(z, z)];
        Scalar diff = img.coeff(hi, hi) - img.coeff(lo, lo);
        if (!(diff == Scalar(algebra->field(), walk_increment(theta, lo, hi, z))))
          throw Error(ErrorKind::NotAdmissible, "diagonal depends on the chosen walk");
      }
  }
  return LinearMap(algebra, std::move(images));
}

ElementaryTriple decompose_elementary(const LinearMap &m)
{
  auto [theta, sigma] = extract_theta_sigma(m);
  const auto &p = m.algebra()->poset();
  std::vector<Scalar> c;
  for (Element i = 0; i < p.size(); ++i)
    c.push_back(m.image(i, i).coeff(0, 0));
  return {std::move(theta), std::move(sigma), std::move(c)};
}

std::vector<BasisBijection> enumerate_theta(const PosetPtr &poset, std::size_t limit, bool parallel)
{
  if (poset->strict_pairs().size() > limit)
    throw Error(ErrorKind::SearchSpaceTooLarge, "|B| = " + std::to_string(poset->strict_pairs().size()) +
                                                  " exceeds the limit " + std::to_string(limit));
  return parallel ? enumerate_theta_parallel(poset) : enumerate_theta_serial(poset);
}

bool sigma_completes_from_unit_seed(const BasisBijection &theta, const Field &field)
{
  std::map<ElementPair, Scalar> seed;
  for (auto c : theta.poset().covers())
    seed.emplace(c, Scalar::one(field));
  try {
    complete_sigma(theta, seed);
    return true;
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::Conflict)
      return false;
    throw;
  }
}

} // namespace incidence
