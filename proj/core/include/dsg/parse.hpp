#pragma once

#include <string_view>
#include <vector>

#include "dsg/polynomial.hpp"

namespace dsg {

/// Parses the polynomial grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' unary) | ('/' integer))*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' positive-integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Whitespace is insignificant. Throws ParseError carrying the byte offset
/// of the offending token.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring);

/// Comma-separated polynomial list, e.g. "x^2, x*y - 1". An empty or
/// all-blank string gives an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring);

}  // namespace dsg
