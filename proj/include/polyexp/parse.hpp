#pragma once

#include <string_view>
#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/unipoly.hpp"

namespace polyexp {

// Grammar (ASCII, whitespace ignored between tokens):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | integer '/' integer | variable | '(' expr ')'
// Variables are u v x y t s z. The first BiPoly slot is spelled u, x or t and
// the second v, y or s; z is only accepted by parse_zpoly. Implicit
// multiplication is a syntax error.

/// Throws ParseError (with byte offset) on malformed input.
BiPoly parse_poly(std::string_view text);

/// Univariate input in any single first-slot variable (u, x or t).
UniPoly parse_uni(std::string_view text);

/// Polynomial in z with (x, y) coefficients: result[i] multiplies z^i.
std::vector<BiPoly> parse_zpoly(std::string_view text);

}  // namespace polyexp
