#pragma once

#include <string>

#include "incidence/algebra.hpp"

namespace incidence {

/**
 * Linear-combination text: `term {(+|-) term}` with
 * `term := [coeff '*'] e(x) | [coeff '*'] e(x,y)` and `0` for zero. A leading
 * sign on the first term is accepted. Rational coefficients are `a/b`.
 */
AlgebraElement parse_combination(const AlgebraPtr &algebra, const std::string &text);

/// Canonical form: terms in basis order, unit coefficients omitted, e.g.
/// `e(1) + e(3) - 1/2*e(1,3)`.
std::string format_combination(const AlgebraElement &f);

/// `e(x)` or `e(x,y)`.
std::string format_basis(const FinitePoset &p, BasisVector b);

} // namespace incidence
