#include <set>

#include "doctest.h"
#include "polyexp/apps.hpp"
#include "polyexp/errors.hpp"
#include "test_support.hpp"

using namespace polyexp;
using namespace polyexp::testing;

namespace {

ParamCurve curve(std::initializer_list<const char*> coords) {
  ParamCurve c;
  for (const char* s : coords) c.coords.push_back(U(s));
  return c;
}

PointSet2D pts(std::initializer_list<std::pair<int, int>> xs) {
  PointSet2D out;
  for (auto [x, y] : xs) out.emplace_back(Rational(x), Rational(y));
  return out;
}

std::vector<Rational> range(int n) {
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

}  // namespace

TEST_CASE("slope_poly") {
  CHECK(slope_poly(U("x^3")) == P("u^2 + u*v + v^2"));
  CHECK(slope_poly(U("x^2")) == P("u + v"));
  CHECK(slope_poly(U("x")) == BiPoly(1));
  CHECK(slope_poly(U("2*x^4 - x + 7")).total_degree() == 3);
  CHECK_THROWS_AS(slope_poly(U("5")), InputError);
}

TEST_CASE("directions_count") {
  CHECK(directions_count(pts({{0, 0}, {1, 1}, {2, 2}})) == 1);
  CHECK(directions_count(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 4);
  // Points (i, i^3): slopes i^2 + i j + j^2 over pairs, brute force.
  for (int n : {4, 7}) {
    PointSet2D p;
    std::set<int> slopes;
    for (int i = 0; i < n; ++i) {
      p.emplace_back(Rational(i), Rational(i * i * i));
      for (int j = 0; j < i; ++j) slopes.insert(i * i + i * j + j * j);
    }
    CHECK(directions_count(p) == static_cast<Count>(slopes.size()));
  }
  CHECK_THROWS_AS(directions_count(pts({{0, 0}})), InputError);
  CHECK_THROWS_AS(directions_count(pts({{0, 0}, {0, 0}})), InputError);
}

TEST_CASE("dist_poly") {
  CHECK(dist_poly(curve({"x", "x^2"})).to_string(kTS) == parse_poly("(t-s)^2 + (t^2-s^2)^2").to_string(kTS));
  CHECK(dist_poly(curve({"2*x", "3*x"})) == parse_poly("13*(t-s)^2"));
  CHECK(dist_poly(curve({"x"})) == parse_poly("(t-s)^2"));

  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    ParamCurve c;
    const int d = static_cast<int>(rng.uniform(1, 4));
    for (int k = 0; k < d; ++k) c.coords.push_back(random_unipoly(rng, static_cast<int>(rng.uniform(1, 4))));
    const BiPoly g = dist_poly(c);
    CHECK(g.swap_vars() == g);
    CHECK(divide_exact(g, P("(u - v)^2")).has_value());
  }
}

TEST_CASE("is_line_param") {
  CHECK(is_line_param(curve({"2*x", "3*x"})));
  CHECK(is_line_param(curve({"x^2", "x^2 + 1"})));
  CHECK_FALSE(is_line_param(curve({"x", "x^2"})));
  CHECK(is_line_param(curve({"x^3 - x", "4", "2*x^3 - 2*x + 1"})));
  CHECK_THROWS_AS(is_line_param(curve({"1", "2"})), InputError);
}

TEST_CASE("distinct_distances_count") {
  CHECK(distinct_distances_count(curve({"x", "x^2"}), range(2)) == 1);
  CHECK(distinct_distances_count(curve({"x", "0"}), range(4)) == 3);
  for (int n : {5, 11, 20}) CHECK(distinct_distances_count(curve({"3*x + 1", "-x"}), range(n)) == n - 1);

  // Parabola: brute force in plain integers.
  for (int n : {6, 10}) {
    std::set<long> d;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < i; ++j) d.insert((i - j) * (i - j) + (i * i - j * j) * (i * i - j * j));
    CHECK(distinct_distances_count(curve({"x", "x^2"}), range(n)) == static_cast<Count>(d.size()));
  }
  CHECK_THROWS_AS(distinct_distances_count(curve({"x^2"}), {Rational(1), Rational(-1)}), InputError);
  CHECK_THROWS_AS(distinct_distances_count(curve({"x"}), {Rational(1), Rational(1)}), InputError);
}

TEST_CASE("special_form_bridge") {
  auto b = special_form_bridge_slope(U("x^3"));
  CHECK(b.form.kind == SpecialKind::none);
  CHECK(b.consistent);
  for (int k = 3; k <= 8; ++k) CHECK(special_form_bridge_slope(UniPoly::monomial(1, k)).form.kind == SpecialKind::none);

  b = special_form_bridge_distance(curve({"2*x", "3*x"}));
  CHECK(b.form.kind == SpecialKind::additive);
  CHECK(b.form.h == U("13*x^2"));
  CHECK(b.form.phi == U("x"));
  CHECK(b.form.psi == U("-x"));
  CHECK(b.consistent);

  b = special_form_bridge_distance(curve({"x", "x^2"}));
  CHECK(b.form.kind == SpecialKind::none);
  CHECK(b.consistent);
}

TEST_CASE("line dichotomy on random curves") {
  Rng rng(2);
  int lines = 0;
  for (int i = 0; i < 100; ++i) {
    ParamCurve c;
    const int d = static_cast<int>(rng.uniform(1, 4));
    if (i % 3 == 0) {
      const UniPoly w = random_unipoly(rng, static_cast<int>(rng.uniform(1, 4)));
      for (int k = 0; k < d; ++k) c.coords.push_back(w * rng.rational(4, 2) + UniPoly::constant(rng.rational(4, 2)));
      c.coords[0] = w;
    } else {
      for (int k = 0; k < d; ++k) c.coords.push_back(random_unipoly(rng, static_cast<int>(rng.uniform(1, 4))));
    }
    const bool line = is_line_param(c);
    lines += line ? 1 : 0;
    CHECK((detect_special(dist_poly(c)).kind != SpecialKind::none) == line);
  }
  CHECK(lines >= 30);
}
