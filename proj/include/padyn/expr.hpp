#ifndef PADYN_EXPR_HPP
#define PADYN_EXPR_HPP

// Polynomial expressions in x.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | unary)*     juxtaposition multiplies
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' integer)?
//   atom    := integer | 'x' | '(' expr ')' | ('binom' | 'C') '(' expr ',' integer ')'
//
// Division is only by nonzero constants. Whitespace is ignored.

#include <string>
#include <string_view>

#include "padyn/poly.hpp"

namespace padyn {

/// Throws ParseError with the offending column.
RationalPoly parse_polynomial(std::string_view text);

/// Terms by descending degree, e.g. "1/3*x^3 - 1/3*x". Parses back to f.
std::string format_polynomial(const RationalPoly &f);

} // namespace padyn

#endif
