#include "incidence/algebra.hpp"

#include <algorithm>
#include <set>

#include "incidence/error.hpp"

namespace incidence {

IncidenceAlgebra::IncidenceAlgebra(PosetPtr poset, Field field)
  : poset_(std::move(poset)), field_(field)
{
  const auto &pairs = poset_->pairs();
  level_.reserve(pairs.size());
  for (auto [x, y] : pairs)
    level_.push_back(poset_->interval_length(x, y));

  row_begin_.assign(poset_->size() + 1, static_cast<int>(pairs.size()));
  for (int i = static_cast<int>(pairs.size()) - 1; i >= 0; --i)
    row_begin_[pairs[i].first] = i;
  for (int x = poset_->size() - 1; x >= 0; --x)
    row_begin_[x] = std::min(row_begin_[x], row_begin_[x + 1]);
}

int IncidenceAlgebra::level(int index) const
{
  return level_.at(index);
}

void IncidenceAlgebra::check_same(const IncidenceAlgebra &other) const
{
  if (this == &other)
    return;
  if (poset_ != other.poset_ && !(*poset_ == *other.poset_))
    throw Error(ErrorKind::PosetMismatch, "elements live over different posets");
  if (!(field_ == other.field_))
    throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + other.field_.name());
}

AlgebraPtr make_algebra(PosetPtr poset, Field field)
{
  return std::make_shared<const IncidenceAlgebra>(std::move(poset), field);
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

AlgebraElement AlgebraElement::basis(const AlgebraPtr &algebra, Element x, Element y)
{
  const int n = algebra->poset().size();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw Error(ErrorKind::UnknownLabel, "basis index out of range");
  int idx = algebra->index(x, y);
  if (idx < 0)
    throw Error(ErrorKind::InvalidArgument,
                "e(" + algebra->poset().label(x) + "," + algebra->poset().label(y) + ") is not a basis vector");
  AlgebraElement e(algebra);
  e.terms_.emplace(idx, algebra->one());
  return e;
}

AlgebraElement AlgebraElement::identity(const AlgebraPtr &algebra)
{
  AlgebraElement e(algebra);
  for (int x = 0; x < algebra->poset().size(); ++x)
    e.terms_.emplace(algebra->index(x, x), algebra->one());
  return e;
}

AlgebraElement AlgebraElement::from_coordinates(const AlgebraPtr &algebra, const std::vector<Scalar> &coords)
{
  if (static_cast<int>(coords.size()) != algebra->dim())
    throw Error(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
  AlgebraElement e(algebra);
  for (int i = 0; i < algebra->dim(); ++i)
    if (!coords[i].is_zero())
      e.terms_.emplace(i, coords[i]);
  return e;
}

Scalar AlgebraElement::coeff_at(int index) const
{
  auto it = terms_.find(index);
  return it == terms_.end() ? algebra_->zero() : it->second;
}

Scalar AlgebraElement::coeff(Element x, Element y) const
{
  int idx = algebra_->index(x, y);
  return idx < 0 ? algebra_->zero() : coeff_at(idx);
}

void AlgebraElement::add_term(int index, const Scalar &c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void AlgebraElement::set_term(int index, const Scalar &c)
{
  if (c.is_zero())
    terms_.erase(index);
  else
    terms_[index] = c;
}

std::vector<Scalar> AlgebraElement::coordinates() const
{
  std::vector<Scalar> out(algebra_->dim(), algebra_->zero());
  for (const auto &[i, c] : terms_)
    out[i] = c;
  return out;
}

bool AlgebraElement::in_radical() const
{
  for (const auto &[i, c] : terms_)
    if (algebra_->level(i) == 0)
      return false;
  return true;
}

bool AlgebraElement::is_diagonal() const
{
  for (const auto &[i, c] : terms_)
    if (algebra_->level(i) != 0)
      return false;
  return true;
}

std::pair<AlgebraElement, AlgebraElement> AlgebraElement::split_diagonal() const
{
  AlgebraElement d(algebra_), j(algebra_);
  for (const auto &[i, c] : terms_)
    (algebra_->level(i) == 0 ? d : j).terms_.emplace(i, c);
  return {std::move(d), std::move(j)};
}

AlgebraElement AlgebraElement::level_component(int level) const
{
  AlgebraElement out(algebra_);
  for (const auto &[i, c] : terms_)
    if (algebra_->level(i) == level)
      out.terms_.emplace(i, c);
  return out;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o)
{
  algebra_->check_same(*o.algebra_);
  for (const auto &[i, c] : o.terms_)
    add_term(i, c);
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o)
{
  algebra_->check_same(*o.algebra_);
  for (const auto &[i, c] : o.terms_)
    add_term(i, -c);
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Scalar &s)
{
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[i, c] : terms_)
    c *= s;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const
{
  AlgebraElement out(*this);
  for (auto &[i, c] : out.terms_)
    c = -c;
  return out;
}

bool operator==(const AlgebraElement &a, const AlgebraElement &b)
{
  a.algebra_->check_same(*b.algebra_);
  return a.terms_ == b.terms_;
}

AlgebraElement multiply(const AlgebraElement &f, const AlgebraElement &g)
{
  f.context().check_same(g.context());
  const auto &alg = f.context();
  AlgebraElement out(f.algebra());
  const auto &gt = g.terms();
  for (const auto &[i, a] : f.terms()) {
    auto [x, t] = alg.basis(i);
    for (auto it = gt.lower_bound(alg.row_begin(t)); it != gt.end() && it->first < alg.row_end(t); ++it) {
      Element y = alg.basis(it->first).second;
      out.add_term(alg.index(x, y), a * it->second);
    }
  }
  return out;
}

AlgebraElement bracket(const AlgebraElement &f, const AlgebraElement &g)
{
  return multiply(f, g) - multiply(g, f);
}

AlgebraElement invert(const AlgebraElement &f)
{
  const auto &alg = f.context();
  const auto &p = alg.poset();
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    if (f.coeff(x, x).is_zero())
      throw Error(ErrorKind::NotInvertible, "zero diagonal entry at " + p.label(x));

  // Solve f g = delta entrywise, shortest intervals first.
  std::vector<int> order(alg.dim());
  for (int i = 0; i < alg.dim(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return alg.level(a) < alg.level(b); });

  std::vector<Scalar> g(alg.dim(), alg.zero());
  for (int idx : order) {
    auto [x, y] = alg.basis(idx);
    Scalar fxx_inv = f.coeff(x, x).inverse();
    if (x == y) {
      g[idx] = fxx_inv;
      continue;
    }
    Scalar acc = alg.zero();
    for (Element t : p.interval(x, y))
      if (t != x)
        acc += f.coeff(x, t) * g[alg.index(t, y)];
    g[idx] = -(fxx_inv * acc);
  }
  return AlgebraElement::from_coordinates(f.algebra(), g);
}

namespace {

std::vector<BasisVector> pairs_where(const FinitePoset &p, auto pred)
{
  std::vector<BasisVector> out;
  for (auto [x, y] : p.pairs())
    if (pred(x, y))
      out.emplace_back(x, y);
  return out;
}

} // namespace

std::vector<BasisVector> radical_power_basis(const FinitePoset &p, int m)
{
  if (m < 1)
    throw Error(ErrorKind::InvalidArgument, "radical power must be at least 1");
  return pairs_where(p, [&](Element x, Element y) { return p.interval_length(x, y) >= m; });
}

std::vector<BasisVector> level_basis(const FinitePoset &p, int i)
{
  if (i < 0)
    throw Error(ErrorKind::InvalidArgument, "level must be non-negative");
  return pairs_where(p, [&](Element x, Element y) { return p.interval_length(x, y) == i; });
}

std::vector<BasisVector> center_of_radical(const FinitePoset &p)
{
  return pairs_where(p, [&](Element x, Element y) {
    return x != y && p.is_minimal(x) && p.is_maximal(y);
  });
}

std::vector<BasisVector> ideal_generated(const AlgebraPtr &algebra, const std::vector<AlgebraElement> &S)
{
  const auto &p = algebra->poset();
  std::set<int> members;
  for (const auto &f : S) {
    algebra->check_same(f.context());
    if (!f.in_radical())
      throw Error(ErrorKind::NotInRadical, "generator has a nonzero diagonal entry");
    // Each nonzero coefficient at (x,y) contributes <e_xy> = span{e_uv : u <= x, y <= v}.
    for (const auto &[i, c] : f.terms()) {
      auto [x, y] = algebra->basis(i);
      for (auto [u, v] : p.pairs())
        if (p.leq(u, x) && p.leq(y, v))
          members.insert(p.pair_index(u, v));
    }
  }
  std::vector<BasisVector> out;
  for (int i : members)
    out.push_back(algebra->basis(i));
  return out;
}

} // namespace incidence
