#include "incidence/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "incidence/error.hpp"

namespace incidence {

FinitePoset FinitePoset::from_cover_relations(
  const std::vector<std::string> &labels,
  const std::vector<std::pair<std::string, std::string>> &covers)
{
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], static_cast<Element>(i)).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' listed twice");

  auto lookup = [&](const std::string &l) {
    auto it = index.find(l);
    if (it == index.end())
      throw Error(ErrorKind::UnknownLabel, "'" + l + "'");
    return it->second;
  };

  std::vector<ElementPair> idx;
  idx.reserve(covers.size());
  for (const auto &[a, b] : covers)
    idx.emplace_back(lookup(a), lookup(b));
  return from_cover_indices(labels, idx);
}

FinitePoset FinitePoset::from_cover_indices(std::vector<std::string> labels,
                                            const std::vector<ElementPair> &covers)
{
  if (labels.empty())
    throw Error(ErrorKind::InvalidArgument, "a poset needs at least one element");

  FinitePoset p;
  p.labels_ = std::move(labels);
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    if (!p.index_.emplace(p.labels_[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + p.labels_[i] + "' listed twice");

  auto name = [&](ElementPair e) { return p.labels_[e.first] + " < " + p.labels_[e.second]; };

  std::set<ElementPair> seen;
  for (auto c : covers) {
    if (c.first < 0 || c.first >= n || c.second < 0 || c.second >= n)
      throw Error(ErrorKind::UnknownLabel, "cover references an element index out of range");
    if (c.first == c.second)
      throw Error(ErrorKind::DirectedCycle, "self-cover at " + p.labels_[c.first]);
    if (!seen.insert(c).second)
      throw Error(ErrorKind::DuplicateCover, name(c));
  }

  // Strict relation, then transitive closure.
  std::vector<char> lt(n * n, 0);
  for (auto [a, b] : covers)
    lt[a * n + b] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (lt[i * n + k])
        for (int j = 0; j < n; ++j)
          if (lt[k * n + j])
            lt[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    if (lt[i * n + i])
      throw Error(ErrorKind::DirectedCycle, "cover relations loop through " + p.labels_[i]);

  for (auto [a, b] : covers)
    for (int c = 0; c < n; ++c)
      if (lt[a * n + c] && lt[c * n + b])
        throw Error(ErrorKind::NotACover,
                    name({a, b}) + " passes through " + p.labels_[c]);

  p.leq_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.leq_[i * n + j] = (i == j) || lt[i * n + j];

  p.covers_.assign(seen.begin(), seen.end());
  p.neighbors_.assign(n, {});
  for (auto [a, b] : p.covers_) {
    p.neighbors_[a].push_back(b);
    p.neighbors_[b].push_back(a);
  }
  for (auto &nb : p.neighbors_)
    std::sort(nb.begin(), nb.end());

  // Connectivity of the undirected Hasse diagram.
  std::vector<char> reached(n, 0);
  std::deque<Element> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element y : p.neighbors_[x])
      if (!reached[y]) {
        reached[y] = 1;
        queue.push_back(y);
      }
  }
  for (int i = 0; i < n; ++i)
    if (!reached[i])
      throw Error(ErrorKind::Disconnected, p.labels_[i] + " is not connected to " + p.labels_[0]);

  // Interval lengths: process x from the top of a linear extension downwards.
  std::vector<Element> order(n);
  for (int i = 0; i < n; ++i)
    order[i] = i;
  auto below = [&](Element x) {
    int c = 0;
    for (int y = 0; y < n; ++y)
      c += p.leq_[y * n + x];
    return c;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below(a) < below(b); });

  p.length_.assign(n * n, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    p.length_[x * n + x] = 0;
    for (Element c : p.neighbors_[x]) {
      if (!lt[x * n + c])
        continue;
      for (int y = 0; y < n; ++y)
        if (p.leq_[c * n + y])
          p.length_[x * n + y] = std::max(p.length_[x * n + y], 1 + p.length_[c * n + y]);
    }
  }

  p.pair_index_.assign(n * n, -1);
  p.strict_index_.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.leq_[x * n + y])
        continue;
      p.pair_index_[x * n + y] = static_cast<int>(p.pairs_.size());
      p.pairs_.emplace_back(x, y);
      if (x != y) {
        p.strict_index_[x * n + y] = static_cast<int>(p.strict_.size());
        p.strict_.emplace_back(x, y);
      }
    }
  return p;
}

Element FinitePoset::index_of(const std::string &label) const
{
  auto it = index_.find(label);
  if (it == index_.end())
    throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
  return it->second;
}

bool FinitePoset::is_minimal(Element x) const
{
  for (int y = 0; y < size(); ++y)
    if (less(y, x))
      return false;
  return true;
}

bool FinitePoset::is_maximal(Element x) const
{
  for (int y = 0; y < size(); ++y)
    if (less(x, y))
      return false;
  return true;
}

int FinitePoset::length(const std::vector<Element> &subset) const
{
  if (subset.empty())
    throw Error(ErrorKind::EmptySubset, "length of an empty subset");
  std::vector<Element> s(subset);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Element x : s)
    if (x < 0 || x >= size())
      throw Error(ErrorKind::UnknownLabel, "element index out of range");

  // Sorting by down-set size gives a linear extension, so one DP pass is exact.
  auto down_size = [&](Element x) {
    int c = 0;
    for (int y = 0; y < size(); ++y)
      c += leq(y, x);
    return c;
  };
  std::stable_sort(s.begin(), s.end(),
                   [&](Element a, Element b) { return down_size(a) < down_size(b); });
  std::vector<int> best(s.size(), 0);
  int result = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (less(s[j], s[i]))
        best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

std::vector<Element> FinitePoset::interval(Element x, Element y) const
{
  std::vector<Element> out;
  if (!leq(x, y))
    return out;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y))
      out.push_back(z);
  return out;
}

int FinitePoset::height() const
{
  int h = 0;
  for (auto [x, y] : pairs_)
    h = std::max(h, interval_length(x, y));
  return h;
}

std::vector<Chain> FinitePoset::maximal_chains() const
{
  std::vector<Chain> out;
  Chain current;
  std::function<void(Element)> extend = [&](Element x) {
    current.push_back(x);
    bool top = true;
    for (Element y : neighbors_[x])
      if (less(x, y)) {
        top = false;
        extend(y);
      }
    if (top)
      out.push_back(current);
    current.pop_back();
  };
  for (int x = 0; x < size(); ++x)
    if (is_minimal(x))
      extend(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool FinitePoset::is_maximal_chain(const Chain &c) const
{
  if (c.empty())
    return false;
  for (Element x : c)
    if (x < 0 || x >= size())
      return false;
  if (!is_minimal(c.front()) || !is_maximal(c.back()))
    return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!is_cover(c[i], c[i + 1]))
      return false;
  return true;
}

std::vector<Cycle> FinitePoset::enumerate_cycles() const
{
  std::vector<Cycle> out;
  std::vector<Element> path;
  std::vector<char> on_path(size(), 0);

  // Cycles are rooted at their least element; only larger vertices are explored.
  std::function<void(Element, Element)> dfs = [&](Element root, Element x) {
    for (Element y : neighbors_[x]) {
      if (y == root && path.size() >= 4 && path[1] < path.back()) {
        Cycle c{path};
        c.vertices.push_back(root);
        out.push_back(std::move(c));
      }
      if (y <= root || on_path[y])
        continue;
      on_path[y] = 1;
      path.push_back(y);
      dfs(root, y);
      path.pop_back();
      on_path[y] = 0;
    }
  };
  for (Element root = 0; root < size(); ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    dfs(root, root);
    on_path[root] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle &a, const Cycle &b) { return a.vertices < b.vertices; });
  return out;
}

bool FinitePoset::is_tree() const
{
  return static_cast<int>(covers_.size()) == size() - 1;
}

Walk FinitePoset::walk_between(Element from, Element to) const
{
  if (from < 0 || from >= size() || to < 0 || to >= size())
    throw Error(ErrorKind::UnknownLabel, "walk endpoint out of range");
  std::vector<Element> parent(size(), -1);
  std::vector<char> seen(size(), 0);
  std::deque<Element> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    if (x == to)
      break;
    for (Element y : neighbors_[x])
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        queue.push_back(y);
      }
  }
  Walk w;
  for (Element x = to; x != -1; x = parent[x])
    w.vertices.push_back(x);
  std::reverse(w.vertices.begin(), w.vertices.end());
  return w;
}

bool FinitePoset::is_walk(const Walk &w) const
{
  if (w.vertices.empty())
    return false;
  for (Element x : w.vertices)
    if (x < 0 || x >= size())
      return false;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    Element a = w.vertices[i], b = w.vertices[i + 1];
    if (!is_cover(a, b) && !is_cover(b, a))
      return false;
  }
  return true;
}

bool FinitePoset::self_anti_isomorphism_exists() const
{
  const int n = size();
  std::vector<int> down(n, 0), up(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      down[x] += leq(y, x);
      up[x] += leq(x, y);
    }

  std::vector<Element> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> assign = [&](int x) {
    if (x == n)
      return true;
    for (Element cand = 0; cand < n; ++cand) {
      if (used[cand] || down[x] != up[cand] || up[x] != down[cand])
        continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y)
        ok = leq(x, y) == leq(image[y], cand) && leq(y, x) == leq(cand, image[y]);
      if (!ok)
        continue;
      image[x] = cand;
      used[cand] = 1;
      if (assign(x + 1))
        return true;
      used[cand] = 0;
    }
    image[x] = -1;
    return false;
  };
  return assign(0);
}

} // namespace incidence
