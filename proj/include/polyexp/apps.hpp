#pragma once

#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/curves.hpp"
#include "polyexp/structure.hpp"
#include "polyexp/unipoly.hpp"

namespace polyexp {

/// t -> (x_1(t), ..., x_d(t)).
struct ParamCurve {
  std::vector<UniPoly> coords;

  /// Throws InputError when there are no coordinates or all are constant.
  void validate() const;
  Point point2d(const Rational& t) const;
};

using PointSet2D = std::vector<Point>;

/// (f(x) - f(y)) / (x - y). Throws InputError for constant f.
BiPoly slope_poly(const UniPoly& f);

/// Distinct directions, vertical included once. Throws InputError for fewer
/// than two points or repeated points.
Count directions_count(const PointSet2D& points);

/// sum_i (x_i(t) - x_i(s))^2, with t in the u slot and s in the v slot.
BiPoly dist_poly(const ParamCurve& curve);

/// True when the image of the curve lies on a line.
bool is_line_param(const ParamCurve& curve);

/// Distinct squared distances over unordered pairs. Throws InputError on
/// repeated parameters or coincident points.
Count distinct_distances_count(const ParamCurve& curve, const std::vector<Rational>& params);

struct BridgeReport {
  SpecialForm form;
  bool predicted_none = false;
  bool consistent = false;  // form.kind == none exactly when predicted_none
};

/// Slope polynomials of degree >= 3 are predicted not special.
BridgeReport special_form_bridge_slope(const UniPoly& f, const FactorConfig& config = {});
/// Distance polynomials are predicted not special exactly for non-lines.
BridgeReport special_form_bridge_distance(const ParamCurve& curve, const FactorConfig& config = {});

}  // namespace polyexp
