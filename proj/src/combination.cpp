#include "incidence/combination.hpp"

#include <cctype>
#include <cstring>

#include "incidence/error.hpp"

namespace incidence {

namespace {

class Cursor {
public:
  explicit Cursor(const std::string &s) : s_(s) {}

  void skip_ws()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done()
  {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek()
  {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c)
  {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  /// Raw characters up to (not including) any of `stops` or whitespace.
  std::string take_until(const char *stops)
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::strchr(stops, s_[pos_]) &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string &msg) const
  {
    throw Error(ErrorKind::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

private:
  const std::string &s_;
  std::size_t pos_ = 0;
};

void parse_term(Cursor &cur, const AlgebraPtr &algebra, const Scalar &sign, AlgebraElement &acc)
{
  const auto &p = algebra->poset();
  Scalar coeff = sign;
  if (cur.peek() != 'e') {
    std::string num = cur.take_until("*+-");
    if (num.empty())
      cur.fail("expected a coefficient or basis vector");
    coeff *= Scalar::parse(algebra->field(), num);
    cur.expect('*');
  }
  cur.expect('e');
  cur.expect('(');
  std::string x = cur.take_until(",)");
  std::string y = x;
  if (cur.accept(','))
    y = cur.take_until(")");
  cur.expect(')');
  if (x.empty() || y.empty())
    cur.fail("empty label");
  Element xi = p.index_of(x), yi = p.index_of(y);
  int idx = algebra->index(xi, yi);
  if (idx < 0)
    cur.fail("e(" + x + "," + y + ") is not a basis vector");
  acc.add_term(idx, coeff);
}

} // namespace

AlgebraElement parse_combination(const AlgebraPtr &algebra, const std::string &text)
{
  Cursor cur(text);
  AlgebraElement acc(algebra);
  const Scalar one = algebra->one();
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first != std::string::npos && text.substr(first, last - first + 1) == "0")
    return acc;
  Scalar sign = one;
  if (cur.accept('-'))
    sign = -one;
  else
    cur.accept('+');
  parse_term(cur, algebra, sign, acc);
  while (!cur.done()) {
    if (cur.accept('+'))
      sign = one;
    else if (cur.accept('-'))
      sign = -one;
    else
      cur.fail("expected '+' or '-'");
    parse_term(cur, algebra, sign, acc);
  }
  return acc;
}

std::string format_basis(const FinitePoset &p, BasisVector b)
{
  if (b.first == b.second)
    return "e(" + p.label(b.first) + ")";
  return "e(" + p.label(b.first) + "," + p.label(b.second) + ")";
}

std::string format_combination(const AlgebraElement &f)
{
  if (f.is_zero())
    return "0";
  const auto &alg = f.context();
  std::string out;
  bool first = true;
  for (const auto &[i, c] : f.terms()) {
    bool negative = c.is_negative();
    Scalar mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (!mag.is_one())
      out += mag.to_string() + "*";
    out += format_basis(alg.poset(), alg.basis(i));
    first = false;
  }
  return out;
}

} // namespace incidence
