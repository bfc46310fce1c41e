#include "incidence/triple_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "incidence/combination.hpp"
#include "incidence/elementary.hpp"
#include "incidence/error.hpp"
#include "incidence/poset_io.hpp"

namespace incidence {

namespace {

BasisVector single_basis(const AlgebraPtr &algebra, const std::string &text)
{
  auto e = parse_combination(algebra, text);
  if (e.terms().size() != 1 || !e.terms().begin()->second.is_one())
    throw Error(ErrorKind::ParseError, "'" + text + "' is not a single basis vector");
  return algebra->basis(e.terms().begin()->first);
}

} // namespace

ElementaryTriple parse_triple(const AlgebraPtr &algebra, std::istream &in, bool complete)
{
  const auto &p = algebra->poset();
  const auto poset = algebra->poset_ptr();
  std::map<ElementPair, ElementPair> theta;
  std::map<ElementPair, Scalar> sigma;
  std::optional<std::vector<Scalar>> c;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize_line(line);
    if (tok.empty())
      continue;
    auto fail = [&](const std::string &msg) {
      return Error(ErrorKind::ParseError, "triple line " + std::to_string(line_no) + ": " + msg);
    };
    std::string body = line.substr(0, line.find('#'));
    try {
      if (tok[0] == "theta") {
        auto arrow = body.find("->");
        if (arrow == std::string::npos)
          throw fail("expected 'theta e(x,y) -> e(u,v)'");
        auto start = body.find("theta") + 5;
        BasisVector from = single_basis(algebra, body.substr(start, arrow - start));
        BasisVector to = single_basis(algebra, body.substr(arrow + 2));
        if (from.first == from.second || to.first == to.second)
          throw fail("theta acts on B only");
        if (!theta.emplace(from, to).second)
          throw fail("theta of " + format_basis(p, from) + " given twice");
      } else if (tok[0] == "sigma") {
        if (tok.size() != 5 || tok[3] != "=")
          throw fail("expected 'sigma x y = <coeff>'");
        ElementPair pair{p.index_of(tok[1]), p.index_of(tok[2])};
        if (!p.less(pair.first, pair.second))
          throw fail("sigma is defined on pairs x < y only");
        if (!sigma.emplace(pair, Scalar::parse(algebra->field(), tok[4])).second)
          throw fail("sigma " + tok[1] + " " + tok[2] + " given twice");
      } else if (tok[0] == "c") {
        if (tok.size() < 2 || tok[1] != "=")
          throw fail("expected 'c = <coeff> ...'");
        if (c)
          throw fail("c given twice");
        c.emplace();
        for (std::size_t i = 2; i < tok.size(); ++i)
          c->push_back(Scalar::parse(algebra->field(), tok[i]));
        if (static_cast<int>(c->size()) != p.size())
          throw fail("c needs " + std::to_string(p.size()) + " entries");
      } else if (tok[0] == "beta") {
        continue;
      } else {
        throw fail("unknown directive '" + tok[0] + "'");
      }
    } catch (const Error &e) {
      if (e.kind() == ErrorKind::ParseError)
        throw;
      throw fail(e.what());
    }
  }

  if (!c)
    throw Error(ErrorKind::ParseError, "triple has no c line");
  for (auto pair : p.strict_pairs())
    if (!theta.count(pair))
      throw Error(ErrorKind::ParseError, "theta missing for " + format_basis(p, pair));

  BasisBijection th = [&] {
    try {
      return BasisBijection::from_pairs(poset, theta);
    } catch (const Error &e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }();

  if (complete)
    return {th, complete_sigma(th, sigma), *c};

  std::vector<Scalar> values;
  for (auto pair : p.strict_pairs()) {
    auto it = sigma.find(pair);
    if (it == sigma.end())
      throw Error(ErrorKind::ParseError, "sigma missing for (" + p.label(pair.first) + "," +
                                           p.label(pair.second) + "); use --complete-sigma to propagate");
    values.push_back(it->second);
  }
  try {
    return {th, SigmaMap(poset, std::move(values)), *c};
  } catch (const Error &e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

ElementaryTriple parse_triple_string(const AlgebraPtr &algebra, const std::string &text, bool complete)
{
  std::istringstream ss(text);
  return parse_triple(algebra, ss, complete);
}

ElementaryTriple load_triple_file(const AlgebraPtr &algebra, const std::string &path, bool complete)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  return parse_triple(algebra, in, complete);
}

std::string format_triple(const ElementaryTriple &t)
{
  const auto &p = t.theta.poset();
  std::ostringstream out;
  for (auto pair : p.strict_pairs())
    out << "theta " << format_basis(p, pair) << " -> " << format_basis(p, t.theta(pair)) << '\n';
  for (auto [x, y] : p.strict_pairs())
    out << "sigma " << p.label(x) << ' ' << p.label(y) << " = " << t.sigma(x, y) << '\n';
  out << "c =";
  for (const auto &ci : t.c)
    out << ' ' << ci;
  out << '\n';
  return out.str();
}

} // namespace incidence
