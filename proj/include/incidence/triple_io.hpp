#pragma once

#include <istream>
#include <string>

#include "incidence/algebra.hpp"
#include "incidence/theta.hpp"

namespace incidence {

/**
 * Triple file:
 *   theta e(x,y) -> e(u,v)    one line per element of B
 *   sigma x y = <coeff>       one line per strict pair
 *   c = <coeff> <coeff> ...   in file element order
 * With `complete_sigma` only cover pairs need a sigma line; the rest is
 * propagated. A `beta = ...` line (as written by decompose) is ignored.
 */
ElementaryTriple parse_triple(const AlgebraPtr &algebra, std::istream &in, bool complete_sigma = false);
ElementaryTriple parse_triple_string(const AlgebraPtr &algebra, const std::string &text,
                                     bool complete_sigma = false);
ElementaryTriple load_triple_file(const AlgebraPtr &algebra, const std::string &path,
                                  bool complete_sigma = false);

std::string format_triple(const ElementaryTriple &t);

} // namespace incidence
