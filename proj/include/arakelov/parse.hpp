#pragma once

#include <string_view>

#include "arakelov/poly.hpp"

namespace arakelov {

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*      division only by nonzero constants
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 't' | 's' | '(' expr ')'
// Errors are ParseError with the byte offset of the offending character.

BiPoly parse_bipoly(std::string_view text);

/// Parses a polynomial in the single variable `var` ('t' or 's'); the other
/// variable is rejected.
Poly parse_poly(std::string_view text, char var = 't');

}  // namespace arakelov
