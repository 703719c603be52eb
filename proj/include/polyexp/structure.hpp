#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/factor.hpp"
#include "polyexp/rng.hpp"
#include "polyexp/unipoly.hpp"

namespace polyexp {

/// f = outer(inner) with deg outer >= 2.
struct Decomposition {
  UniPoly outer;
  BiPoly inner;

  BiPoly recompose() const { return compose(outer, inner); }
};

enum class SpecialKind { additive, multiplicative, degenerate_u, degenerate_v, none };

std::string to_string(SpecialKind kind);

/// Witnesses for f = h(phi(u) + psi(v)) or f = h(phi(u) * psi(v)).
///
/// Additive witnesses have zero constant term and phi is monic. Multiplicative
/// witnesses are monic. A degenerate-u form has phi = x, psi = 0 and h = f
/// read as a polynomial in u (symmetrically for degenerate-v), so degenerate
/// forms recompose additively. For kind none all three are zero.
struct SpecialForm {
  SpecialKind kind = SpecialKind::none;
  UniPoly h;
  UniPoly phi;
  UniPoly psi;

  /// The polynomial inside h: phi(u) + psi(v) or phi(u) * psi(v).
  BiPoly inner() const;
  BiPoly recompose() const { return compose(h, inner()); }
};

/// f = u * p(u) * q(v) + r(v).
struct SkewForm {
  UniPoly p;
  UniPoly q;
  UniPoly r;

  BiPoly recompose() const;
};

enum class HCase { additive, multiplicative, degenerate };

std::string to_string(HCase c);

/// The two-variable polynomial h built from the coefficient lists of f.
/// Indices that the case does not use are -1.
struct AssociatedH {
  BiPoly h;
  HCase kind = HCase::degenerate;
  int k = -1;
  int ell = -1;
  int e = -1;
  int e_prime = -1;
};

struct SteinReport {
  std::vector<Rational> sample;
  std::vector<Rational> reducible_lambdas;
  int degree = 0;
};

/// f_u / f_v = [a_num(u) / a_den(u)] * [b_num(v) / b_den(v)] in lowest terms,
/// with a_num, a_den, b_den monic.
struct SeparatedRatio {
  UniPoly a_num;
  UniPoly a_den;
  UniPoly b_num;
  UniPoly b_den;
};

/// r with f = r(g) when f lies in Q[g]. Throws InputError for constant g.
std::optional<UniPoly> membership_in(const BiPoly& f, const BiPoly& g);

/// A decomposition f = r(q), deg r >= 2, with q having zero constant term and
/// leading coefficient 1, or none when f is indecomposable. The anchor
/// (a, b) is drawn from rng. Throws InputError when deg f < 2.
std::optional<Decomposition> bi_decompose(const BiPoly& f, Rng& rng,
                                          const FactorConfig& config = {});

/// 0, 1, -1, 2, -2, ... with 10 * degree values.
std::vector<Rational> stein_default_sample(int degree);

SteinReport stein_count(const BiPoly& f, const std::vector<Rational>& sample,
                        const FactorConfig& config = {});

/// Throws InputError when f does not depend on both variables.
std::optional<SeparatedRatio> separated_ratio(const BiPoly& f);

SpecialForm detect_special(const BiPoly& f, const FactorConfig& config = {});

std::optional<SkewForm> detect_skew_form(const BiPoly& f);

/// Throws InputError when f does not depend on both variables.
AssociatedH associated_h(const BiPoly& f);

}  // namespace polyexp
