#include "incidence/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "incidence/error.hpp"

namespace incidence {

std::vector<std::string> tokenize_line(const std::string &line)
{
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;)
    out.push_back(tok);
  return out;
}

namespace {

Field parse_field(const std::string &token, int line_no)
{
  if (token == "Q")
    return Field::rationals();
  if (token.size() > 1 && token[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9' || p > (std::uint64_t{1} << 40))
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad field '" + token + "'");
      p = p * 10 + static_cast<std::uint64_t>(token[i] - '0');
    }
    try {
      return Field::prime(p);
    } catch (const Error &e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad field '" + token + "'");
}

bool valid_label(const std::string &l)
{
  return l.find_first_of("(),*+/=") == std::string::npos && l != "-" && l != "->";
}

} // namespace

PosetFile parse_poset(std::istream &in)
{
  enum class Stage { Field, Elements, Covers } stage = Stage::Field;
  Field field;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize_line(line);
    if (tok.empty())
      continue;
    auto fail = [&](const std::string &msg) {
      return Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    switch (stage) {
    case Stage::Field:
      if (tok[0] != "field" || tok.size() != 2)
        throw fail("expected 'field Q' or 'field F<p>'");
      field = parse_field(tok[1], line_no);
      stage = Stage::Elements;
      break;
    case Stage::Elements:
      if (tok[0] != "elements" || tok.size() < 2)
        throw fail("expected 'elements <label> ...'");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!valid_label(tok[i]))
          throw fail("label '" + tok[i] + "' contains a reserved character");
        labels.push_back(tok[i]);
      }
      stage = Stage::Covers;
      break;
    case Stage::Covers:
      if (tok[0] != "cover" || tok.size() != 3)
        throw fail("expected 'cover <a> <b>'");
      covers.emplace_back(tok[1], tok[2]);
      break;
    }
  }
  if (stage != Stage::Covers)
    throw Error(ErrorKind::ParseError, "missing field or elements line");

  auto poset = std::make_shared<const FinitePoset>(FinitePoset::from_cover_relations(labels, covers));
  return {std::move(poset), field};
}

PosetFile parse_poset_string(const std::string &text)
{
  std::istringstream ss(text);
  return parse_poset(ss);
}

PosetFile load_poset_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  return parse_poset(in);
}

std::string format_poset(const FinitePoset &p, const Field &field)
{
  std::ostringstream out;
  out << "field " << field.name() << "\nelements";
  for (const auto &l : p.labels())
    out << ' ' << l;
  out << '\n';
  for (auto [a, b] : p.covers())
    out << "cover " << p.label(a) << ' ' << p.label(b) << '\n';
  return out.str();
}

} // namespace incidence
