#include "incidence/linear_map.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "incidence/combination.hpp"
#include "incidence/error.hpp"

namespace incidence {

LinearMap::LinearMap(AlgebraPtr algebra, std::vector<AlgebraElement> images)
  : algebra_(std::move(algebra)), images_(std::move(images))
{
  if (static_cast<int>(images_.size()) != algebra_->dim())
    throw Error(ErrorKind::InvalidArgument, "a linear map needs one image per basis vector");
  for (const auto &img : images_)
    algebra_->check_same(img.context());
}

LinearMap LinearMap::identity(const AlgebraPtr &algebra)
{
  std::vector<AlgebraElement> images;
  for (auto [x, y] : algebra->poset().pairs())
    images.push_back(AlgebraElement::basis(algebra, x, y));
  return LinearMap(algebra, std::move(images));
}

LinearMap LinearMap::zero(const AlgebraPtr &algebra)
{
  return LinearMap(algebra, std::vector<AlgebraElement>(algebra->dim(), AlgebraElement(algebra)));
}

LinearMap LinearMap::from_matrix(const AlgebraPtr &algebra, const Matrix &m)
{
  const int n = algebra->dim();
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorKind::InvalidArgument, "matrix size does not match the algebra");
  std::vector<AlgebraElement> images;
  for (int j = 0; j < n; ++j) {
    AlgebraElement img(algebra);
    for (int i = 0; i < n; ++i)
      img.add_term(i, m(i, j));
    images.push_back(std::move(img));
  }
  return LinearMap(algebra, std::move(images));
}

const AlgebraElement &LinearMap::image(Element x, Element y) const
{
  int idx = algebra_->index(x, y);
  if (idx < 0)
    throw Error(ErrorKind::InvalidArgument, "not a basis vector");
  return images_[idx];
}

AlgebraElement LinearMap::apply(const AlgebraElement &f) const
{
  algebra_->check_same(f.context());
  AlgebraElement out(algebra_);
  for (const auto &[i, c] : f.terms())
    out += images_[i] * c;
  return out;
}

Matrix LinearMap::matrix() const
{
  const int n = algebra_->dim();
  Matrix m(algebra_->field(), n, n);
  for (int j = 0; j < n; ++j)
    for (const auto &[i, c] : images_[j].terms())
      m(i, j) = c;
  return m;
}

bool LinearMap::is_bijective() const
{
  return matrix().rank() == algebra_->dim();
}

LinearMap &LinearMap::operator+=(const LinearMap &o)
{
  algebra_->check_same(*o.algebra_);
  for (std::size_t i = 0; i < images_.size(); ++i)
    images_[i] += o.images_[i];
  return *this;
}

LinearMap &LinearMap::operator-=(const LinearMap &o)
{
  algebra_->check_same(*o.algebra_);
  for (std::size_t i = 0; i < images_.size(); ++i)
    images_[i] -= o.images_[i];
  return *this;
}

LinearMap LinearMap::operator-() const
{
  LinearMap out(*this);
  for (auto &img : out.images_)
    img = -img;
  return out;
}

bool operator==(const LinearMap &a, const LinearMap &b)
{
  a.algebra_->check_same(*b.algebra_);
  return a.images_ == b.images_;
}

LinearMap compose(const LinearMap &outer, const LinearMap &inner)
{
  outer.algebra()->check_same(*inner.algebra());
  std::vector<AlgebraElement> images;
  images.reserve(inner.images().size());
  for (const auto &img : inner.images())
    images.push_back(outer.apply(img));
  return LinearMap(inner.algebra(), std::move(images));
}

LinearMap invert_map(const LinearMap &m)
{
  return LinearMap::from_matrix(m.algebra(), m.matrix().inverse());
}

LinearMap parse_map(const AlgebraPtr &algebra, std::istream &in)
{
  const auto &p = algebra->poset();
  std::vector<std::optional<AlgebraElement>> images(algebra->dim());
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    auto fail = [&](const std::string &msg) {
      return Error(ErrorKind::ParseError, "map line " + std::to_string(line_no) + ": " + msg);
    };
    auto arrow = body.find("->");
    if (arrow == std::string::npos) {
      std::istringstream ss(body);
      std::string a, b, name;
      if (!seen_content && ss >> a >> b >> name && a == "map" && b == "for") {
        seen_content = true;
        continue;
      }
      throw fail("expected 'e(...) -> <combination>'");
    }
    seen_content = true;
    AlgebraElement lhs = parse_combination(algebra, body.substr(0, arrow));
    if (lhs.terms().size() != 1 || !lhs.terms().begin()->second.is_one())
      throw fail("left-hand side must be a single basis vector");
    int idx = lhs.terms().begin()->first;
    if (images[idx])
      throw fail(format_basis(p, algebra->basis(idx)) + " assigned twice");
    images[idx] = parse_combination(algebra, body.substr(arrow + 2));
  }
  std::vector<AlgebraElement> out;
  for (int i = 0; i < algebra->dim(); ++i) {
    if (!images[i])
      throw Error(ErrorKind::ParseError, "map has no image for " + format_basis(p, algebra->basis(i)));
    out.push_back(std::move(*images[i]));
  }
  return LinearMap(algebra, std::move(out));
}

LinearMap parse_map_string(const AlgebraPtr &algebra, const std::string &text)
{
  std::istringstream ss(text);
  return parse_map(algebra, ss);
}

LinearMap load_map_file(const AlgebraPtr &algebra, const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  return parse_map(algebra, in);
}

std::string format_map(const LinearMap &m, const std::string &poset_name)
{
  const auto &alg = *m.algebra();
  std::ostringstream out;
  if (!poset_name.empty())
    out << "map for " << poset_name << '\n';
  for (int i = 0; i < alg.dim(); ++i)
    out << format_basis(alg.poset(), alg.basis(i)) << " -> " << format_combination(m.image(i)) << '\n';
  return out.str();
}

} // namespace incidence
