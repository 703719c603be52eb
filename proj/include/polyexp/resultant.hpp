#pragma once

#include <vector>

#include "polyexp/bipoly.hpp"

namespace polyexp {

/// Polynomial in an eliminated variable z with coefficients in Q[x, y];
/// element i multiplies z^i. Trailing zero coefficients are not allowed.
using ZPoly = std::vector<BiPoly>;

/// Determinant by fraction-free Bareiss elimination over Q[x, y].
BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m);

/// Sylvester resultant in z. Both inputs must have positive z-degree.
BiPoly resultant_z(const ZPoly& f, const ZPoly& g);

}  // namespace polyexp
