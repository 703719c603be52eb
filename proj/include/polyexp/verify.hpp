#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/rng.hpp"
#include "polyexp/structure.hpp"

namespace polyexp::verify {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Image sizes of u^2 + uv + v^2 on {0, ..., n-1}^2 for n = 8, 16, 32, 64 and
/// their log-log slope, from tests/oracles/growth_reference.py.
inline constexpr std::int64_t kGrowthReferenceSizes[] = {35, 126, 462, 1709};
inline constexpr double kGrowthReferenceExponent = 1.8703430112109742;

/// Result of the small-degree special-form search. Witnesses are present when
/// kind is not none.
struct OracleResult {
  bool applicable = false;
  SpecialKind kind = SpecialKind::none;
  UniPoly h;
  UniPoly phi;
  UniPoly psi;
};

/// Searches for Q-witnesses of either special form by fixing deg h, reading
/// phi and psi off boundary coefficients (truncated roots) and solving a
/// linear system for h. Uses no derivatives, gcds or factorization.
/// Applicable only when the total degree of f is at most max_degree.
OracleResult oracle_special(const BiPoly& f, int max_degree = 6);

/// Random f = h(phi(u) + psi(v)) or h(phi(u) psi(v)) with deg h, deg phi,
/// deg psi in [1, 3] and total degree at most max_total.
BiPoly random_special(Rng& rng, bool multiplicative, int max_total = 12);

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kSuiteCount = 11;

/// Runs acceptance suite `id` (1..11) from the given seed.
SuiteResult run_suite(int id, std::uint64_t seed = kDefaultSeed);

/// One line: "PASS  3 non-special corpus: ...".
std::string format_line(const SuiteResult& r);

}  // namespace polyexp::verify
