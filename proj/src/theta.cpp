#include "incidence/theta.hpp"

#include "incidence/error.hpp"

namespace incidence {

BasisBijection::BasisBijection(PosetPtr poset, std::vector<int> image)
  : poset_(std::move(poset)), image_(std::move(image))
{
  const auto &strict = poset_->strict_pairs();
  const int n = static_cast<int>(strict.size());
  if (static_cast<int>(image_.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "theta needs one image per element of B");
  preimage_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    int t = image_[k];
    if (t < 0 || t >= n || preimage_[t] != -1)
      throw Error(ErrorKind::InvalidArgument, "theta is not a bijection of B");
    preimage_[t] = k;
    auto [x, y] = strict[k];
    auto [u, v] = strict[t];
    if (poset_->interval_length(x, y) != poset_->interval_length(u, v))
      throw Error(ErrorKind::InvalidArgument, "theta does not preserve interval length at e(" +
                                                poset_->label(x) + "," + poset_->label(y) + ")");
  }
}

BasisBijection BasisBijection::identity(PosetPtr poset)
{
  std::vector<int> image(poset->strict_pairs().size());
  for (std::size_t k = 0; k < image.size(); ++k)
    image[k] = static_cast<int>(k);
  return BasisBijection(std::move(poset), std::move(image));
}

BasisBijection BasisBijection::from_pairs(PosetPtr poset, const std::map<ElementPair, ElementPair> &mapping)
{
  const auto &strict = poset->strict_pairs();
  std::vector<int> image(strict.size(), -1);
  for (const auto &[from, to] : mapping) {
    int a = poset->strict_index(from.first, from.second);
    int b = poset->strict_index(to.first, to.second);
    if (a < 0 || b < 0)
      throw Error(ErrorKind::InvalidArgument, "theta maps a pair outside B");
    image[a] = b;
  }
  return BasisBijection(std::move(poset), std::move(image));
}

ElementPair BasisBijection::operator()(Element x, Element y) const
{
  int k = poset_->strict_index(x, y);
  if (k < 0)
    throw Error(ErrorKind::InvalidArgument, "theta is only defined on B");
  return poset_->strict_pairs()[image_[k]];
}

ElementPair BasisBijection::preimage(Element x, Element y) const
{
  int k = poset_->strict_index(x, y);
  if (k < 0)
    throw Error(ErrorKind::InvalidArgument, "theta is only defined on B");
  return poset_->strict_pairs()[preimage_[k]];
}

BasisBijection BasisBijection::inverse() const
{
  return BasisBijection(poset_, preimage_);
}

SigmaMap::SigmaMap(PosetPtr poset, std::vector<Scalar> values)
  : poset_(std::move(poset)), values_(std::move(values))
{
  if (values_.size() != poset_->strict_pairs().size())
    throw Error(ErrorKind::InvalidArgument, "sigma needs one value per strict pair");
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k].is_zero()) {
      auto [x, y] = poset_->strict_pairs()[k];
      throw Error(ErrorKind::InvalidArgument,
                  "sigma(" + poset_->label(x) + "," + poset_->label(y) + ") must be nonzero");
    }
}

SigmaMap SigmaMap::constant(PosetPtr poset, const Scalar &value)
{
  std::size_t n = poset->strict_pairs().size();
  return SigmaMap(std::move(poset), std::vector<Scalar>(n, value));
}

const Scalar &SigmaMap::operator()(Element x, Element y) const
{
  int k = poset_->strict_index(x, y);
  if (k < 0)
    throw Error(ErrorKind::InvalidArgument, "sigma is only defined on strict pairs");
  return values_[k];
}

} // namespace incidence
