#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/rational.hpp"
#include "polyexp/unipoly.hpp"

namespace polyexp {

/// Desk-scale limits for factorization.
struct FactorConfig {
  int bi_degree_cap = 12;
  int uni_degree_cap = 24;
};

/// input == unit * prod(factor^multiplicity). Factors are irreducible over Q,
/// have integer content 1 and positive leading coefficient, and are pairwise
/// distinct. Ordered by degree, then by canonical text.
template <class Poly>
struct Factorization {
  Rational unit;
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const {
    Poly out;
    if constexpr (std::is_same_v<Poly, UniPoly>) {
      out = UniPoly::constant(unit);
    } else {
      out = BiPoly(unit);
    }
    for (const auto& [p, m] : factors)
      for (int i = 0; i < m; ++i) out = out * p;
    return out;
  }
  int count_with_multiplicity() const {
    int n = 0;
    for (const auto& f : factors) n += f.second;
    return n;
  }
};

using UniFactorization = Factorization<UniPoly>;
using BiFactorization = Factorization<BiPoly>;

/// Complete factorization over Q (square-free split, then Zassenhaus).
UniFactorization uni_factor(const UniPoly& p, const FactorConfig& config = {});

/// Complete factorization over Q[u, v] (content split, square-free split,
/// Kronecker substitution and recombination).
BiFactorization bi_factor(const BiPoly& f, const FactorConfig& config = {});

/// Square-free decomposition over Q: p = c * prod(parts[i].first^parts[i].second)
/// with monic, pairwise coprime, square-free parts.
std::vector<std::pair<UniPoly, int>> square_free_parts(const UniPoly& p);

bool is_irreducible(const UniPoly& p, const FactorConfig& config = {});
bool is_irreducible(const BiPoly& f, const FactorConfig& config = {});

}  // namespace polyexp
