#include "doctest.h"
#include "polyexp/curves.hpp"
#include "polyexp/errors.hpp"
#include "polyexp/gcd.hpp"
#include "test_support.hpp"

using namespace polyexp;
using namespace polyexp::testing;

namespace {

RationalSet ints(std::initializer_list<int> xs) {
  RationalSet out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

BiPoly X(const char* text) { return parse_poly(text); }

bool equal_up_to_sign(const BiPoly& a, const BiPoly& b) { return a == b || a == -b; }

const Component* find_component(const ComponentReport& rep, const BiPoly& p) {
  for (const auto& c : rep.components)
    if (c.poly == p) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("curve constructors") {
  CHECK(curve_poly_std(P("u+v"), 1, 2) == X("x - y - 1"));
  CHECK(curve_poly_std(P("u*v"), 1, 1) == X("x - y"));
  CHECK(curve_poly_std(P("u^2+v^2"), 1, 2) == X("x^2 - y^2 - 3"));
  CHECK(dual_curve_poly(P("u+v"), 0, 0) == X("x - y"));
  CHECK(dual_curve_poly(P("u*v"), 2, 3) == X("2*x - 3*y"));

  CHECK(equal_up_to_sign(proj_curve_poly(P("u*v"), 1, 1), X("x*y - 1")));
  CHECK(equal_up_to_sign(proj_curve_poly(P("u+v"), 0, 0), X("x + y")));
  CHECK(equal_up_to_sign(proj_curve_poly(P("u*v"), 2, 6), X("x*y - 12")));
  CHECK_THROWS_AS(proj_curve_poly(P("u*v"), 0, 1), InputError);
}

TEST_CASE("P1 point-curve duality") {
  Rng rng(1);
  int on_curve = 0;
  for (int i = 0; i < 200; ++i) {
    const BiPoly f = random_bipoly(rng, 3, 0.6, 3);
    const Rational a1 = rng.uniform(-3, 3), a2 = rng.uniform(-3, 3);
    const Rational b1 = rng.uniform(-3, 3), b2 = rng.uniform(-3, 3);
    const bool primal = curve_poly_std(f, a1, a2).eval(b1, b2).is_zero();
    const bool dual = dual_curve_poly(f, b1, b2).eval(a1, a2).is_zero();
    CHECK(primal == dual);
    on_curve += primal ? 1 : 0;
  }
  CHECK(on_curve > 0);
}

TEST_CASE("P2 projection soundness") {
  Rng rng(2);
  int checked = 0;
  for (int i = 0; i < 80 && checked < 40; ++i) {
    const BiPoly f = random_bipoly(rng, 3, 0.6, 3);
    const Rational a = rng.rational(4, 2);
    if (f.eval_u(a).is_constant() || !f.depends_on(Var::v)) continue;
    const Rational x0 = rng.rational(4, 2), z0 = rng.rational(4, 2);
    BiPoly g;
    try {
      g = proj_curve_poly(f, a, f.eval(x0, z0));
    } catch (const InputError&) {
      continue;
    }
    CHECK(g.eval(x0, f.eval(a, z0)).is_zero());
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("P3 many common points force a common factor") {
  Rng rng(3);
  const RationalSet grid = gen_set(SetSpec::arithmetic(-6, 1, 13));
  for (int i = 0; i < 30; ++i) {
    const BiPoly w = i % 2 == 0 ? X("x - y") : random_bipoly(rng, 1, 1.0, 3);
    const BiPoly f = w * random_bipoly(rng, 2, 0.7, 3), g = w * random_bipoly(rng, 2, 0.7, 3);
    const BiPoly h1 = random_bipoly(rng, 2, 0.7, 3), h2 = random_bipoly(rng, 2, 0.7, 3);
    for (const auto& [p, q] : {std::pair{f, g}, std::pair{h1, h2}}) {
      if (p.is_zero() || q.is_zero()) continue;
      Count common = 0;
      for (const Rational& x : grid)
        for (const Rational& y : grid)
          if (p.eval(x, y).is_zero() && q.eval(x, y).is_zero()) ++common;
      if (common > Count{p.total_degree()} * q.total_degree()) CHECK_FALSE(bi_gcd(p, q).is_constant());
    }
  }
}

TEST_CASE("lemma_common_check") {
  auto r = lemma_common_check(X("4*x^2 - y^2"), X("8*x^3 - y^3"));
  CHECK(r.ok);
  CHECK(r.lhs == 64);
  CHECK(r.rhs == 64);
  CHECK(lemma_common_check(X("x^2 - y^2"), X("x^3 - y^3")).ok);
  r = lemma_common_check(X("9*x^2 - y^2"), X("27*x^3 - y^3"));
  CHECK(r.lhs == 729);
  CHECK(r.ok);
  CHECK_THROWS_AS(lemma_common_check(X("x^2 - y"), X("x - y")), InputError);
  CHECK_THROWS_AS(lemma_common_check(X("x^2 - y^2 + 1"), X("x^2 - y^2 - 1")), InputError);
  CHECK_THROWS_AS(lemma_common_check(X("x*y - 1"), X("x - y")), InputError);
}

TEST_CASE("P4 identity on constructed shared-factor pairs") {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    Rational alpha = rng.rational(5, 3), beta = rng.rational(5, 3), lambda = rng.rational(5, 3);
    if (alpha.is_zero()) alpha = 2;
    if (beta.is_zero()) beta = -3;
    if (lambda.is_zero()) lambda = 1;
    const UniPoly p = random_unipoly(rng, static_cast<int>(rng.uniform(1, 4)));
    const UniPoly q = random_unipoly(rng, static_cast<int>(rng.uniform(1, 4)));
    const BiPoly f = BiPoly::lift(p.affine(alpha, 0), Var::u) - BiPoly::lift(p.affine(beta, 0), Var::v);
    const BiPoly g = (BiPoly::lift(q.affine(alpha, 0), Var::u) - BiPoly::lift(q.affine(beta, 0), Var::v)) * lambda;
    if (p.degree() == 1 && alpha == beta) continue;
    CHECK(lemma_common_check(f, g).ok);
  }
}

TEST_CASE("shared_components") {
  const BiPoly f = P("(u+v)^2");
  const RationalSet s = ints({0, 1, 2});
  const CurveFamily fam = make_family(f, FamilyKind::standard, product_pairs(s, s));
  const ComponentReport rep = shared_components(fam);
  CHECK(rep.m0.m0_part2 == 4);
  CHECK(rep.m0.m0_part1 == 2 * 2 + 2 * 2 * (2 + 2 - 1));
  CHECK(rep.threshold == 4);
  const Component* diag = find_component(rep, X("x - y"));
  REQUIRE(diag != nullptr);
  CHECK(diag->multiplicity == 3);
  CHECK_FALSE(diag->popular);
  for (const auto& c : rep.components)
    for (std::size_t i : c.members) CHECK(divide_exact(fam.members[i].poly, c.poly).has_value());

  Rng rng(5);
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int i = 0; i < 6; ++i) pairs.emplace_back(rng.rational(20, 7), rng.rational(20, 7));
  const auto generic = shared_components(make_family(P("u^2 + u*v + v^2"), FamilyKind::standard, pairs));
  for (const auto& c : generic.components) CHECK(c.multiplicity == 1);

  const auto single = shared_components(make_family(P("u^2 - v^2"), FamilyKind::standard, {{1, 1}}));
  CHECK(single.components.size() == 2);
  for (const auto& c : single.components) CHECK(c.multiplicity == 1);

  CHECK_THROWS_AS(make_family(P("u^2"), FamilyKind::standard, {{1, 1}}), InputError);
}

TEST_CASE("incidence_count") {
  const BiPoly f = P("u*v");
  const RationalSet s = ints({1, 2});
  auto fam = make_family(f, FamilyKind::projected, product_pairs(s, s));
  const auto pts = product_pairs(s, s);
  const auto rep = incidence_count(pts, fam);
  // gamma_{a,c} is x*y - a*c up to sign; count points with x*y = a*c.
  Count brute = 0;
  for (const auto& m : fam.members)
    for (const auto& [x, y] : pts)
      if (x * y == m.first * m.second) ++brute;
  CHECK(rep.incidences == brute);
  CHECK(incidence_count({}, fam).incidences == 0);

  auto doubled = fam;
  doubled.members.push_back(fam.members[0]);
  CHECK(incidence_count(pts, doubled).incidences ==
        rep.incidences + incidence_count(pts, CurveFamily{fam.kind, f, {fam.members[0]}}).incidences);

  // A point on two components of one member counts twice.
  const CurveFamily two{FamilyKind::standard, P("(u+v)^2"), {{0, 0, X("(x-y)*(x+y)")}}};
  CHECK(incidence_count({{Rational(0), Rational(0)}}, two).incidences == 2);
}

TEST_CASE("cs_incidence_check") {
  const RationalSet s = ints({1, 2, 3});
  auto r = cs_incidence_check(P("u*v"), s, s, s);
  CHECK(r.ok);
  CHECK(r.lhs <= r.rhs);
  r = cs_incidence_check(P("u*v + u"), s, ints({2}), s);
  CHECK(r.ok);
  r = cs_incidence_check(P("u + v"), s, s, ints({100, 101}));
  CHECK(r.lhs == 0);
  CHECK(r.ok);
  CHECK_THROWS_AS(cs_incidence_check(P("u*v"), ints({0, 1}), s, s), InputError);

  Rng rng(7);
  int done = 0;
  for (int i = 0; i < 60 && done < 8; ++i) {
    const BiPoly f = random_bipoly(rng, 2, 0.7, 2);
    if (!f.depends_on(Var::u) || !f.depends_on(Var::v)) continue;
    const auto a0 = gen_set(SetSpec::random(rng.next(), 6, 4, 1));
    const auto b = gen_set(SetSpec::random(rng.next(), 6, 4, 1));
    const auto c0 = image(f, a0, b);
    const auto t = trim_degenerate(f, a0, RationalSet(c0.begin(), c0.begin() + std::min<std::size_t>(6, c0.size())));
    try {
      const auto chk = cs_incidence_check(f, t.a, b, t.c);
      CHECK(chk.ok);
      ++done;
    } catch (const InputError&) {
    }
  }
  CHECK(done >= 5);
}

TEST_CASE("h(a,p) = h(b,q) on the popular diagonal of the (u+v)^2 family") {
  const BiPoly f = P("(u+v)^2");
  const RationalSet s = gen_set(SetSpec::arithmetic(0, 1, 6));
  const CurveFamily fam = make_family(f, FamilyKind::standard, product_pairs(s, s));
  const ComponentReport rep = shared_components(fam);
  const Component* diag = find_component(rep, X("x - y"));
  REQUIRE(diag != nullptr);
  CHECK(diag->multiplicity == 6);
  CHECK(diag->popular);
  const BiPoly h = associated_h(f).h;
  const auto q = associated_h_on_component(fam, *diag, h, gen_set(SetSpec::arithmetic(-5, 1, 11)));
  CHECK(q.checked == 66);
  CHECK(q.violations == 0);
}
