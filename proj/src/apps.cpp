#include "polyexp/apps.hpp"

#include <set>
#include <unordered_set>

#include "polyexp/errors.hpp"

namespace polyexp {

void ParamCurve::validate() const {
  if (coords.empty()) throw InputError("curve needs at least one coordinate");
  for (const UniPoly& c : coords)
    if (!c.is_constant()) return;
  throw InputError("curve has only constant coordinates");
}

Point ParamCurve::point2d(const Rational& t) const {
  if (coords.size() != 2) throw InputError("point2d: curve is not planar");
  return {coords[0].eval(t), coords[1].eval(t)};
}

BiPoly slope_poly(const UniPoly& f) {
  if (f.is_constant()) throw InputError("slope_poly: f must be non-constant");
  BiPoly::Terms terms;
  for (int k = 1; k <= f.degree(); ++k) {
    const Rational c = f.coeff(k);
    if (c.is_zero()) continue;
    for (int i = 0; i < k; ++i) {
      auto [it, fresh] = terms.emplace(Monomial{i, k - 1 - i}, c);
      if (!fresh) it->second += c;
    }
  }
  BiPoly g(std::move(terms));
  if (g * (BiPoly::u() - BiPoly::v()) != BiPoly::lift(f, Var::u) - BiPoly::lift(f, Var::v))
    throw InternalError("slope_poly: quotient check failed");
  return g;
}

Count directions_count(const PointSet2D& points) {
  if (points.size() < 2) throw InputError("directions_count: need at least two points");
  if (std::set<Point>(points.begin(), points.end()).size() != points.size())
    throw InputError("directions_count: repeated point");
  std::unordered_set<Rational, RationalHash> slopes;
  bool vertical = false;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rational dx = points[j].first - points[i].first;
      if (dx.is_zero()) {
        vertical = true;
      } else {
        slopes.insert((points[j].second - points[i].second) / dx);
      }
    }
  return static_cast<Count>(slopes.size()) + (vertical ? 1 : 0);
}

BiPoly dist_poly(const ParamCurve& curve) {
  curve.validate();
  BiPoly out;
  for (const UniPoly& x : curve.coords) {
    const BiPoly diff = BiPoly::lift(x, Var::u) - BiPoly::lift(x, Var::v);
    out += diff * diff;
  }
  return out;
}

bool is_line_param(const ParamCurve& curve) {
  curve.validate();
  std::vector<UniPoly> shifted;
  for (const UniPoly& x : curve.coords) {
    UniPoly w = x - UniPoly::constant(x.constant_term());
    if (!w.is_zero()) shifted.push_back(std::move(w));
  }
  const UniPoly& base = shifted.front();
  for (const UniPoly& w : shifted)
    if (w.degree() != base.degree() || w != base * (w.leading() / base.leading())) return false;
  return true;
}

Count distinct_distances_count(const ParamCurve& curve, const std::vector<Rational>& params) {
  curve.validate();
  if (std::set<Rational>(params.begin(), params.end()).size() != params.size())
    throw InputError("distinct_distances_count: repeated parameter");
  std::vector<std::vector<Rational>> pts;
  for (const Rational& t : params) {
    std::vector<Rational> p;
    for (const UniPoly& x : curve.coords) p.push_back(x.eval(t));
    pts.push_back(std::move(p));
  }
  if (std::set<std::vector<Rational>>(pts.begin(), pts.end()).size() != pts.size())
    throw InputError("distinct_distances_count: coincident points");
  std::unordered_set<Rational, RationalHash> dists;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rational s;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        const Rational d = pts[i][k] - pts[j][k];
        s += d * d;
      }
      dists.insert(s);
    }
  return static_cast<Count>(dists.size());
}

BridgeReport special_form_bridge_slope(const UniPoly& f, const FactorConfig& config) {
  if (f.degree() < 3) throw InputError("special_form_bridge: slope case needs deg f >= 3");
  BridgeReport out;
  out.form = detect_special(slope_poly(f), config);
  out.predicted_none = true;
  out.consistent = out.form.kind == SpecialKind::none;
  return out;
}

BridgeReport special_form_bridge_distance(const ParamCurve& curve, const FactorConfig& config) {
  BridgeReport out;
  out.form = detect_special(dist_poly(curve), config);
  out.predicted_none = !is_line_param(curve);
  out.consistent = (out.form.kind == SpecialKind::none) == out.predicted_none;
  return out;
}

}  // namespace polyexp
