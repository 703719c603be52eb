#include "doctest.h"
#include "polyexp/errors.hpp"
#include "polyexp/gcd.hpp"
#include "polyexp/resultant.hpp"
#include "test_support.hpp"

using namespace polyexp;
using namespace polyexp::testing;

TEST_CASE("parse_poly builds the expected term maps") {
  const BiPoly a = P("u + v");
  CHECK(a.size() == 2);
  CHECK(a.coeff(1, 0) == 1);
  CHECK(a.coeff(0, 1) == 1);

  const BiPoly b = P("u^2*v - 3/2*v^3");
  CHECK(b.size() == 2);
  CHECK(b.coeff(2, 1) == 1);
  CHECK(b.coeff(0, 3) == Q("-3/2"));
  CHECK(b.degree_u() == 2);
  CHECK(b.degree_v() == 3);
  CHECK(b.total_degree() == 3);

  const BiPoly c = P("(u+v)^2");
  CHECK(c == BiPoly(BiPoly::Terms{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
}

TEST_CASE("parse_poly reports errors with offsets") {
  CHECK_THROWS_AS(P("2u"), ParseError);
  CHECK_THROWS_AS(P("u v"), ParseError);
  CHECK_THROWS_AS(P("q + 1"), ParseError);
  CHECK_THROWS_AS(P("3/0*u"), ParseError);
  CHECK_THROWS_AS(P("u^v"), ParseError);
  CHECK_THROWS_AS(P("u + x"), ParseError);
  CHECK_THROWS_AS(P("u*z"), ParseError);
  CHECK_THROWS_AS(P("(u+v"), ParseError);
  try {
    P("u + w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("canonical print is graded-lex and reparses to the same polynomial") {
  CHECK(P("u^2*v - 3/2*v^3").to_string() == "u^2*v - 3/2*v^3");
  CHECK(P("-3/2*v^3 + u^2*v").to_string() == "u^2*v - 3/2*v^3");
  CHECK(P("(u+v)^2").to_string() == "u^2 + 2*u*v + v^2");
  CHECK(P("1 - u").to_string() == "-u + 1");
  CHECK(P("0*u").to_string() == "0");
  CHECK(P("x^2 - y").to_string(kXY) == "x^2 - y");

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const BiPoly f = random_bipoly(rng, 6) * rng.rational(7, 5);
    CHECK(parse_poly(f.to_string()) == f);
  }
}

TEST_CASE("eval") {
  CHECK(P("u + v").eval(1, 2) == 3);
  CHECK(P("(u+v)^2").eval(1, 1) == 4);
  CHECK(P("u^2*v - 3/2*v^3").eval(2, 2) == -4);
}

TEST_CASE("partial derivatives") {
  CHECK(P("u^2*v").partial(Var::u) == P("2*u*v"));
  CHECK(P("u + v^3").partial(Var::v) == P("3*v^2"));
  CHECK(P("(u+v)^2").partial(Var::u) == P("2*u + 2*v"));
}

TEST_CASE("coefficient decomposition") {
  auto cd = P("u^2 + u*v").coeff_decomposition(Var::u);
  REQUIRE(cd.coefficients.size() == 3);
  CHECK(cd.coefficients[0].is_zero());
  CHECK(cd.coefficients[1] == UniPoly::x());
  CHECK(cd.coefficients[2] == UniPoly::constant(1));

  cd = P("u + v^2").coeff_decomposition(Var::u);
  REQUIRE(cd.coefficients.size() == 2);
  CHECK(cd.coefficients[0] == U("x^2"));
  CHECK(cd.coefficients[1] == UniPoly::constant(1));

  cd = P("u*v").coeff_decomposition(Var::v);
  REQUIRE(cd.coefficients.size() == 2);
  CHECK(cd.coefficients[0].is_zero());
  CHECK(cd.coefficients[1] == UniPoly::x());

  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const BiPoly f = random_bipoly(rng, 7);
    CHECK(f.coeff_decomposition(Var::u).recombine() == f);
    CHECK(f.coeff_decomposition(Var::v).recombine() == f);
  }
}

TEST_CASE("lt_poly") {
  CHECK(lt_poly(parse_poly("x^3 - x*y^2 + y - 2")) == P("x^3 - x*y^2"));
  CHECK(lt_poly(P("u+v")) == P("u+v"));
  CHECK(lt_poly(P("(u+v)^2 + u")) == P("u^2 + 2*u*v + v^2"));
  CHECK_THROWS_AS(lt_poly(BiPoly()), InputError);

  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const BiPoly f = random_bipoly(rng, 4), g = random_bipoly(rng, 4);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(lt_poly(f * g) == lt_poly(f) * lt_poly(g));
  }
}

TEST_CASE("ring axioms and evaluation homomorphism") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const BiPoly f = random_bipoly(rng, 4), g = random_bipoly(rng, 4), h = random_bipoly(rng, 3);
    CHECK((f + g) * h == f * h + g * h);
    const Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
    CHECK((f * g).eval(a, b) == f.eval(a, b) * g.eval(a, b));
  }
}

TEST_CASE("bi_gcd") {
  CHECK(bi_gcd(parse_poly("x^2 - y^2"), parse_poly("x^3 - y^3")) == parse_poly("x - y"));
  const BiPoly f = P("3*u^2*v - 6*v + 1/2*u");
  CHECK(bi_gcd(f, f) == f.normalized());
  CHECK(bi_gcd(P("u"), P("v")) == BiPoly(1));
  CHECK(bi_gcd(P("u^2 - 1"), P("u*v + v")) == P("u + 1"));
  CHECK(bi_gcd(P("0"), P("-2*u")) == P("u"));
  CHECK_THROWS_AS(bi_gcd(BiPoly(), BiPoly()), InputError);

  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const BiPoly a = random_bipoly(rng, 3), b = random_bipoly(rng, 3), w = random_bipoly(rng, 3);
    if (a.is_zero() || b.is_zero() || w.is_zero()) continue;
    const BiPoly g = bi_gcd(a, b);
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
    CHECK(bi_gcd(w * a, w * b) == (w * g).normalized());
  }
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(P("u^2 - v^2"), P("u - v")) == P("u + v"));
  CHECK_FALSE(divide_exact(P("u^2 + v^2"), P("u - v")).has_value());
}

TEST_CASE("resultant in z") {
  // Res_z(y - 2z, 3 - x z) = det [[-2, y], [-x, 3]] = x*y - 6
  const BiPoly r1 = resultant_z(parse_zpoly("y - 2*z"), parse_zpoly("3 - x*z"));
  CHECK((r1 == parse_poly("x*y - 6") || r1 == parse_poly("6 - x*y")));
  CHECK(resultant_z(parse_zpoly("z - 1"), parse_zpoly("z - 1")).is_zero());
  const BiPoly r3 = resultant_z(parse_zpoly("z^2 - x"), parse_zpoly("z - y"));
  CHECK((r3 == parse_poly("y^2 - x") || r3 == parse_poly("x - y^2")));
  CHECK_THROWS_AS(resultant_z(parse_zpoly("x + 1"), parse_zpoly("z")), InputError);

  // Soundness: the resultant vanishes at projected common roots.
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    const BiPoly f = random_bipoly(rng, 3);
    if (f.degree_v() < 1) continue;
    const Rational a = rng.rational(5, 3), x0 = rng.rational(5, 3), z0 = rng.rational(5, 3);
    const Rational c = f.eval(x0, z0), y0 = f.eval(a, z0);
    // y - f(a, z) and c - f(x, z) as polynomials in z.
    ZPoly p1, p2;
    const UniPoly fa = f.eval_u(a);
    for (int j = 0; j <= f.degree_v(); ++j) {
      p1.push_back(BiPoly(-fa.coeff(j)) + (j == 0 ? BiPoly::v() : BiPoly()));
      BiPoly cj;
      for (const auto& [m, coef] : f.terms())
        if (m.v == j) cj -= BiPoly::monomial(coef, m.u, 0);
      if (j == 0) cj += BiPoly(c);
      p2.push_back(cj);
    }
    if (p1.back().is_zero() || p2.back().is_zero() || p1.size() < 2) continue;
    CHECK(resultant_z(p1, p2).eval(x0, y0) == 0);
  }
}
