#pragma once

#include "polyexp/bipoly.hpp"
#include "polyexp/parse.hpp"
#include "polyexp/rng.hpp"

namespace polyexp::testing {

inline BiPoly P(const char* text) { return parse_poly(text); }
inline UniPoly U(const char* text) { return parse_uni(text); }
inline Rational Q(const char* text) { return Rational::parse(text); }

// Random polynomial with total degree <= max_degree and small coefficients.
inline BiPoly random_bipoly(Rng& rng, int max_degree, double density = 0.6, std::int64_t coeff = 5) {
  BiPoly::Terms t;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = 0; i <= d; ++i)
      if (static_cast<double>(rng.uniform(0, 999)) < density * 1000.0) {
        auto c = rng.uniform(-coeff, coeff);
        if (c != 0) t.emplace(Monomial{i, d - i}, Rational(c));
      }
  return BiPoly(std::move(t));
}

inline UniPoly random_unipoly(Rng& rng, int degree, std::int64_t coeff = 5) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(rng.uniform(-coeff, coeff));
  while (c.back().is_zero()) c.back() = Rational(rng.uniform(1, coeff));
  return UniPoly(std::move(c));
}

}  // namespace polyexp::testing
