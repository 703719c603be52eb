#pragma once

#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/unipoly.hpp"

namespace polyexp {

/// Polynomial in the chosen variable with coefficients in Q[other variable].
using Recursive = std::vector<UniPoly>;

Recursive to_recursive(const BiPoly& f, Var main);
BiPoly from_recursive(const Recursive& r, Var main);

/// Monic gcd of the coefficients of f viewed in Q[other][main].
UniPoly content(const BiPoly& f, Var main);

/// Primitive gcd over Q[u, v], normalized to integer content 1 and a positive
/// graded-lex leading coefficient. gcd(0, 0) throws InputError.
BiPoly bi_gcd(const BiPoly& f, const BiPoly& g);

}  // namespace polyexp
