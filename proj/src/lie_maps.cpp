#include "incidence/lie_maps.hpp"

#include "incidence/error.hpp"
#include "incidence/kernels.hpp"

namespace incidence {

InnerUnit::InnerUnit(AlgebraElement beta) : beta_(std::move(beta))
{
  if (!(beta_.split_diagonal().first == AlgebraElement::identity(beta_.algebra())))
    throw Error(ErrorKind::InvalidArgument, "inner unit must have diagonal part delta");
}

namespace {

bool is_unital(const LinearMap &m)
{
  const auto delta = AlgebraElement::identity(m.algebra());
  return m.apply(delta) == delta;
}

void require_lie(const LinearMap &m)
{
  if (!is_lie_automorphism(m))
    throw Error(ErrorKind::NotLieAutomorphism, "map is not a Lie automorphism");
}

} // namespace

bool is_lie_automorphism(const LinearMap &m)
{
  return m.is_bijective() && count_law_violations_parallel(m, ProductLaw::Bracket) == 0;
}

bool is_algebra_automorphism(const LinearMap &m)
{
  return m.is_bijective() && is_unital(m) && count_law_violations_parallel(m, ProductLaw::Product) == 0;
}

bool is_anti_automorphism(const LinearMap &m)
{
  return m.is_bijective() && is_unital(m) &&
         count_law_violations_parallel(m, ProductLaw::ReversedProduct) == 0;
}

LinearMap inner_from_unit(const InnerUnit &u)
{
  const auto &alg = u.beta().algebra();
  const AlgebraElement inv = invert(u.beta());
  std::vector<AlgebraElement> images;
  for (auto [x, y] : alg->poset().pairs())
    images.push_back(u.beta() * AlgebraElement::basis(alg, x, y) * inv);
  return LinearMap(alg, std::move(images));
}

LinearMap tilde(const LinearMap &m)
{
  require_lie(m);
  const auto &alg = *m.algebra();
  std::vector<AlgebraElement> images;
  for (int i = 0; i < alg.dim(); ++i)
    images.push_back(m.image(i).level_component(alg.level(i)));
  return LinearMap(m.algebra(), std::move(images));
}

bool is_elementary(const LinearMap &m)
{
  const auto &alg = *m.algebra();
  for (int i = 0; i < alg.dim(); ++i)
    for (const auto &[j, c] : m.image(i).terms())
      if (alg.level(j) != alg.level(i))
        return false;
  return is_lie_automorphism(m);
}

std::pair<BasisBijection, SigmaMap> extract_theta_sigma(const LinearMap &m)
{
  if (!is_elementary(m))
    throw Error(ErrorKind::NotElementary, "map does not preserve every level space");
  const auto &alg = *m.algebra();
  const auto &p = alg.poset();
  std::vector<int> image;
  std::vector<Scalar> sigma;
  for (auto [x, y] : p.strict_pairs()) {
    const auto &img = m.image(x, y);
    // A Lie automorphism preserving levels sends e_xy to a nonzero multiple of one basis vector.
    if (img.terms().size() != 1)
      throw Error(ErrorKind::NotElementary, "image of a radical basis vector is not a single term");
    auto [j, c] = *img.terms().begin();
    auto [u, v] = alg.basis(j);
    image.push_back(p.strict_index(u, v));
    sigma.push_back(c);
  }
  return {BasisBijection(alg.poset_ptr(), std::move(image)), SigmaMap(alg.poset_ptr(), std::move(sigma))};
}

InnerElementary decompose_inner_elementary(const LinearMap &m)
{
  LinearMap tau = tilde(m);
  LinearMap kernel_part = compose(m, invert_map(tau));
  const auto &alg = m.algebra();
  AlgebraElement beta(alg);
  for (Element x = 0; x < alg->poset().size(); ++x) {
    auto ex = AlgebraElement::idempotent(alg, x);
    beta += kernel_part.apply(ex) * ex;
  }
  return {InnerUnit(std::move(beta)), std::move(tau)};
}

LinearMap central_part(const AlgebraPtr &algebra, const std::vector<Scalar> &alpha)
{
  const auto &p = algebra->poset();
  if (static_cast<int>(alpha.size()) != p.size())
    throw Error(ErrorKind::InvalidArgument, "one alpha per element required");
  const auto delta = AlgebraElement::identity(algebra);
  LinearMap nu = LinearMap::zero(algebra);
  std::vector<AlgebraElement> images = nu.images();
  for (Element z = 0; z < p.size(); ++z)
    images[algebra->index(z, z)] = delta * alpha[z];
  return LinearMap(algebra, std::move(images));
}

LinearMap proper_component(const LinearMap &m, const ProperWitness &w)
{
  LinearMap psi = m - central_part(m.algebra(), w.alpha);
  return w.kind == ProperWitness::Kind::Automorphism ? psi : -psi;
}

std::optional<ProperWitness> is_proper(const LinearMap &m)
{
  require_lie(m);
  const auto &alg = m.algebra();
  const auto &p = alg->poset();
  const int n = p.size();
  const Scalar one = alg->one();

  // m(delta) = k delta since delta is central and X is connected.
  const Scalar k = m.apply(AlgebraElement::identity(alg)).coeff(0, 0);

  for (auto kind : {ProperWitness::Kind::Automorphism, ProperWitness::Kind::NegatedAntiAutomorphism}) {
    const bool anti = kind == ProperWitness::Kind::NegatedAntiAutomorphism;
    // psi(e_z) must be idempotent, so its diagonal has entries in {0,1}; that
    // leaves at most two choices of alpha_z.
    std::vector<std::vector<Scalar>> candidates(n);
    bool feasible = true;
    for (Element z = 0; z < n && feasible; ++z) {
      const auto &img = m.image(z, z);
      const Scalar d0 = img.coeff(0, 0);
      for (const Scalar &alpha : {d0, anti ? d0 + one : d0 - one}) {
        bool ok = true;
        for (Element v = 0; v < n && ok; ++v) {
          Scalar entry = anti ? alpha - img.coeff(v, v) : img.coeff(v, v) - alpha;
          ok = entry.is_zero() || entry.is_one();
        }
        bool dup = !candidates[z].empty() && candidates[z].front() == alpha;
        if (ok && !dup)
          candidates[z].push_back(alpha);
      }
      feasible = !candidates[z].empty();
    }
    if (!feasible)
      continue;

    // psi(delta) = delta pins the sum of the alphas.
    const Scalar target = anti ? k + one : k - one;
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      std::vector<Scalar> alpha(n, alg->zero());
      Scalar sum = alg->zero();
      for (Element z = 0; z < n; ++z) {
        alpha[z] = candidates[z][choice[z]];
        sum += alpha[z];
      }
      if (sum == target) {
        ProperWitness w{kind, alpha};
        LinearMap psi = proper_component(m, w);
        if (anti ? is_anti_automorphism(psi) : is_algebra_automorphism(psi))
          return w;
      }
      Element z = 0;
      for (; z < n; ++z) {
        if (++choice[z] < candidates[z].size())
          break;
        choice[z] = 0;
      }
      if (z == n)
        break;
    }
  }
  return std::nullopt;
}

} // namespace incidence
