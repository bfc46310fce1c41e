#pragma once

#include <istream>
#include <string>

#include "incidence/poset.hpp"
#include "incidence/scalar.hpp"

namespace incidence {

/// A poset file: `field Q` or `field F<p>`, then `elements ...`, then
/// `cover a b` lines. `#` starts a comment.
struct PosetFile {
  PosetPtr poset;
  Field field;
};

PosetFile parse_poset(std::istream &in);
PosetFile parse_poset_string(const std::string &text);
PosetFile load_poset_file(const std::string &path);

std::string format_poset(const FinitePoset &p, const Field &field);

/// Splits on whitespace after removing a trailing `#` comment.
std::vector<std::string> tokenize_line(const std::string &line);

} // namespace incidence
