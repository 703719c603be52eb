#include "polyexp/curves.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "polyexp/errors.hpp"
#include "polyexp/gcd.hpp"
#include "polyexp/resultant.hpp"

namespace polyexp {

BiPoly curve_poly_std(const BiPoly& f, const Rational& a, const Rational& b) {
  return BiPoly::lift(f.eval_u(a), Var::u) - BiPoly::lift(f.eval_u(b), Var::v);
}

BiPoly dual_curve_poly(const BiPoly& f, const Rational& xi, const Rational& eta) {
  return BiPoly::lift(f.eval_v(xi), Var::u) - BiPoly::lift(f.eval_v(eta), Var::v);
}

BiPoly proj_curve_poly(const BiPoly& f, const Rational& a, const Rational& c) {
  const UniPoly fa = f.eval_u(a);
  if (fa.is_constant()) throw InputError("proj_curve_poly: f(a, z) is constant in z");

  // y - f(a, z)
  ZPoly first;
  for (int j = 0; j <= fa.degree(); ++j) {
    BiPoly coeff(-fa.coeff(j));
    if (j == 0) coeff += BiPoly::v();
    first.push_back(std::move(coeff));
  }
  // c - f(x, z)
  ZPoly second;
  const auto ct = f.coeff_decomposition(Var::v).coefficients;
  for (std::size_t j = 0; j < ct.size(); ++j) {
    BiPoly coeff = -BiPoly::lift(ct[j], Var::u);
    if (j == 0) coeff += BiPoly(c);
    second.push_back(std::move(coeff));
  }
  BiPoly r = resultant_z(first, second);
  if (r.is_zero()) throw InputError("proj_curve_poly: resultant vanishes identically (untrimmed input)");
  return r;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::standard: return "standard";
    case FamilyKind::dual: return "dual";
    case FamilyKind::projected: return "projected";
  }
  return "standard";
}

CurveFamily make_family(const BiPoly& f, FamilyKind kind,
                        const std::vector<std::pair<Rational, Rational>>& params) {
  CurveFamily fam{kind, f, {}};
  for (const auto& [p1, p2] : params) {
    BiPoly g;
    switch (kind) {
      case FamilyKind::standard: g = curve_poly_std(f, p1, p2); break;
      case FamilyKind::dual: g = dual_curve_poly(f, p1, p2); break;
      case FamilyKind::projected: g = proj_curve_poly(f, p1, p2); break;
    }
    if (g.is_zero())
      throw InputError("curve family member (" + p1.to_string() + ", " + p2.to_string() +
                       ") is the zero polynomial");
    fam.members.push_back({p1, p2, std::move(g)});
  }
  return fam;
}

std::vector<std::pair<Rational, Rational>> product_pairs(const RationalSet& first,
                                                         const RationalSet& second) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const Rational& x : first)
    for (const Rational& y : second) out.emplace_back(x, y);
  return out;
}

Thresholds thresholds(const BiPoly& f) {
  const Count du = std::max(f.degree_u(), 0), dv = std::max(f.degree_v(), 0),
              d = std::max(f.total_degree(), 0);
  Thresholds t;
  t.m0_part1 = du * dv + du * d * (d + dv - 1);
  t.m0_tilde = du * dv + dv * d * (d + du - 1);
  t.m0_part2 = std::max(du * du, dv * dv);
  return t;
}

ComponentReport shared_components(const CurveFamily& family, const FactorConfig& config) {
  ComponentReport rep;
  rep.kind = family.kind;
  rep.m0 = thresholds(family.source);
  rep.threshold = family.kind == FamilyKind::projected ? rep.m0.m0_part1 : rep.m0.m0_part2;

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const BiPoly& g = family.members[i].poly;
    if (g.is_constant()) continue;
    for (const auto& [p, mult] : bi_factor(g, config).factors) {
      auto [it, fresh] = index.emplace(p.to_string(), rep.components.size());
      if (fresh) rep.components.push_back({p, 0, {}, false});
      Component& comp = rep.components[it->second];
      ++comp.multiplicity;
      comp.members.push_back(i);
    }
  }
  for (Component& comp : rep.components) comp.popular = comp.multiplicity > rep.threshold;
  return rep;
}

IncidenceReport incidence_count(const std::vector<Point>& points, const CurveFamily& family,
                                const FactorConfig& config) {
  IncidenceReport rep;
  rep.per_point.assign(points.size(), 0);
  rep.per_member.assign(family.members.size(), 0);
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const BiPoly& g = family.members[i].poly;
    std::optional<BiFactorization> fac;
    for (std::size_t j = 0; j < points.size(); ++j) {
      const auto& [x, y] = points[j];
      if (!g.eval(x, y).is_zero()) continue;
      if (!fac) fac = bi_factor(g, config);
      Count k = 0;
      for (const auto& [p, mult] : fac->factors)
        if (p.eval(x, y).is_zero()) ++k;
      rep.per_point[j] += k;
      rep.per_member[i] += k;
      rep.incidences += k;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct Separated {
  UniPoly p;
  UniPoly q;
};

// f = p(x) - q(y) with q(0) = 0.
Separated split_separated(const BiPoly& f) {
  std::vector<Rational> p(std::max(f.degree_u(), 0) + 1), q(std::max(f.degree_v(), 0) + 1);
  for (const auto& [m, c] : f.terms()) {
    if (m.u > 0 && m.v > 0) throw InputError("lemma_common_check: input is not of the form p(x) - q(y)");
    if (m.v == 0) {
      p[m.u] = c;
    } else {
      q[m.v] = -c;
    }
  }
  return {UniPoly(std::move(p)), UniPoly(std::move(q))};
}

}  // namespace

LemmaCheck lemma_common_check(const BiPoly& f, const BiPoly& g) {
  const Separated sf = split_separated(f), sg = split_separated(g);
  LemmaCheck out;
  out.d1 = sf.p.degree();
  out.d2 = sg.p.degree();
  if (out.d1 < 1 || out.d2 < 1 || sf.q.degree() != out.d1 || sg.q.degree() != out.d2)
    throw InputError("lemma_common_check: each input needs deg p = deg q >= 1");
  if (bi_gcd(f, g).is_constant()) throw InputError("lemma_common_check: inputs share no common factor");
  out.a1 = sf.p.leading();
  out.b1 = sf.q.leading();
  out.a2 = sg.p.leading();
  out.b2 = sg.q.leading();
  out.lhs = (out.a1 / out.b1).pow(static_cast<unsigned>(out.d2));
  out.rhs = (out.a2 / out.b2).pow(static_cast<unsigned>(out.d1));
  out.ok = out.lhs == out.rhs;
  return out;
}

CsIncidenceCheck cs_incidence_check(const BiPoly& f, const RationalSet& a, const RationalSet& b,
                                    const RationalSet& c, const FactorConfig& config) {
  const TrimResult trim = trim_degenerate(f, a, c);
  if (!trim.removed_a.empty() || !trim.removed_c.empty())
    throw InputError("cs_incidence_check: A and C must be trimmed first");

  const GridReport grid = count_M(f, a, b, c);
  __int128 lhs = 0;
  for (const auto& [x, n] : grid.fibers_by_b) lhs += static_cast<__int128>(n) * n;

  const auto pairs = product_pairs(a, c);
  const CurveFamily fam = make_family(f, FamilyKind::projected, pairs);
  const IncidenceReport inc = incidence_count(pairs, fam, config);

  CsIncidenceCheck out;
  out.lhs = static_cast<Count>(lhs);
  out.incidences = inc.incidences;
  const Count du = f.degree_u(), dv = f.degree_v();
  out.rhs = dv * inc.incidences + du * du * static_cast<Count>(b.size());
  out.ok = out.lhs <= out.rhs;
  return out;
}

QuadrupleCheck associated_h_on_component(const CurveFamily& family, const Component& component,
                                         const BiPoly& h, const RationalSet& points) {
  QuadrupleCheck out;
  for (std::size_t i : component.members) {
    const CurveMember& m = family.members.at(i);
    for (const Rational& p : points)
      for (const Rational& q : points) {
        if (!component.poly.eval(p, q).is_zero()) continue;
        ++out.checked;
        if (h.eval(m.first, p) != h.eval(m.second, q)) ++out.violations;
      }
  }
  return out;
}

}  // namespace polyexp
