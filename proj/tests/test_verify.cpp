#include "doctest.h"
#include "polyexp/verify.hpp"
#include "test_support.hpp"

using namespace polyexp;
using namespace polyexp::testing;

TEST_CASE("oracle finds planted forms") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const bool mult = i % 2 == 1;
    const BiPoly f = verify::random_special(rng, mult, 6);
    const auto r = verify::oracle_special(f);
    REQUIRE(r.applicable);
    REQUIRE(r.kind != SpecialKind::none);
    const BiPoly phi = BiPoly::lift(r.phi, Var::u), psi = BiPoly::lift(r.psi, Var::v);
    CHECK(compose(r.h, r.kind == SpecialKind::multiplicative ? phi * psi : phi + psi) == f);
  }
}

TEST_CASE("oracle on known cases") {
  CHECK(verify::oracle_special(P("u^2 + u*v + v^2")).kind == SpecialKind::none);
  CHECK(verify::oracle_special(P("(u+v)^2")).kind == SpecialKind::additive);
  CHECK(verify::oracle_special(P("u^2*v^2 + 3*u*v")).kind == SpecialKind::multiplicative);
  CHECK(verify::oracle_special(P("u^3 - 2")).kind == SpecialKind::degenerate_u);
  CHECK_FALSE(verify::oracle_special(P("u^4*v^3")).applicable);
}

TEST_CASE("random_special respects the degree cap") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) CHECK(verify::random_special(rng, i % 2 == 0, 8).total_degree() <= 8);
}

TEST_CASE("suite lines") {
  const auto r = verify::run_suite(9);
  CHECK(r.passed);
  CHECK(verify::format_line(r).rfind("PASS   9 ", 0) == 0);
  CHECK_THROWS(verify::run_suite(0));
}
