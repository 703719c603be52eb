#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/factor.hpp"
#include "polyexp/grid.hpp"
#include "polyexp/structure.hpp"

namespace polyexp {

using Point = std::pair<Rational, Rational>;

// Curves live in the (x, y) plane; the u slot of a BiPoly is x, the v slot y.

/// f(a, x) - f(b, y).
BiPoly curve_poly_std(const BiPoly& f, const Rational& a, const Rational& b);
/// f(x, xi) - f(y, eta).
BiPoly dual_curve_poly(const BiPoly& f, const Rational& xi, const Rational& eta);
/// Res_z(y - f(a, z), c - f(x, z)). Throws InputError when f(a, .) is
/// constant or the resultant vanishes identically (untrimmed input).
BiPoly proj_curve_poly(const BiPoly& f, const Rational& a, const Rational& c);

enum class FamilyKind { standard, dual, projected };

std::string to_string(FamilyKind kind);

struct CurveMember {
  Rational first;
  Rational second;
  BiPoly poly;
};

struct CurveFamily {
  FamilyKind kind = FamilyKind::standard;
  BiPoly source;
  std::vector<CurveMember> members;
};

/// One member per parameter pair. Throws InputError on a zero member.
CurveFamily make_family(const BiPoly& f, FamilyKind kind,
                        const std::vector<std::pair<Rational, Rational>>& params);
/// All pairs of first x second, in row-major order.
std::vector<std::pair<Rational, Rational>> product_pairs(const RationalSet& first,
                                                         const RationalSet& second);

struct Thresholds {
  Count m0_part1 = 0;  // d_u d_v + d_u d (d + d_v - 1)
  Count m0_tilde = 0;  // d_u d_v + d_v d (d + d_u - 1)
  Count m0_part2 = 0;  // max(d_u^2, d_v^2)
};

Thresholds thresholds(const BiPoly& f);

struct Component {
  BiPoly poly;
  int multiplicity = 0;             // number of members it divides
  std::vector<std::size_t> members;  // indices into the family
  bool popular = false;
};

struct ComponentReport {
  FamilyKind kind = FamilyKind::standard;
  Thresholds m0;
  Count threshold = 0;  // m0_part1 for projected families, m0_part2 otherwise
  std::vector<Component> components;  // in order of first appearance
};

ComponentReport shared_components(const CurveFamily& family, const FactorConfig& config = {});

struct IncidenceReport {
  Count incidences = 0;
  std::vector<Count> per_point;
  std::vector<Count> per_member;
};

/// Each member contributes, at each point, the number of its distinct
/// irreducible components vanishing there.
IncidenceReport incidence_count(const std::vector<Point>& points, const CurveFamily& family,
                                const FactorConfig& config = {});

struct LemmaCheck {
  int d1 = 0;
  int d2 = 0;
  Rational a1, b1, a2, b2;
  Rational lhs;  // (a1 / b1)^d2
  Rational rhs;  // (a2 / b2)^d1
  bool ok = false;
};

/// f = p1(x) - q1(y), g = p2(x) - q2(y) with deg p_i = deg q_i = d_i sharing
/// a nontrivial factor. Throws InputError when the preconditions fail.
LemmaCheck lemma_common_check(const BiPoly& f, const BiPoly& g);

struct CsIncidenceCheck {
  Count lhs = 0;  // sum_b M_b^2
  Count rhs = 0;  // d_v I + d_u^2 |B|
  Count incidences = 0;
  bool ok = false;
};

/// Uses the projected family over A x C with points A x C. Throws InputError
/// when trim_degenerate would change A or C.
CsIncidenceCheck cs_incidence_check(const BiPoly& f, const RationalSet& a, const RationalSet& b,
                                    const RationalSet& c, const FactorConfig& config = {});

struct QuadrupleCheck {
  Count checked = 0;
  Count violations = 0;
};

/// For every member (a, b) of a standard family divisible by `component` and
/// every (p, q) in points x points on the component, compares h(a, p) with
/// h(b, q).
QuadrupleCheck associated_h_on_component(const CurveFamily& family, const Component& component,
                                         const BiPoly& h, const RationalSet& points);

}  // namespace polyexp
