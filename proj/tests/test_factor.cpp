#include <set>

#include "doctest.h"
#include "polyexp/errors.hpp"
#include "polyexp/factor.hpp"
#include "polyexp/gcd.hpp"
#include "test_support.hpp"

using namespace polyexp;
using namespace polyexp::testing;

namespace {

std::multiset<std::string> factor_texts(const BiFactorization& f) {
  std::multiset<std::string> out;
  for (const auto& [p, m] : f.factors)
    for (int i = 0; i < m; ++i) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("uni_factor examples") {
  auto f = uni_factor(U("x^2 - 1"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first * f.factors[1].first == U("x^2 - 1"));
  CHECK(f.factors[0].first.degree() == 1);

  f = uni_factor(U("x^2 + 1"));
  CHECK(f.factors.size() == 1);

  f = uni_factor(U("6*x^2 + 5*x + 1"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == U("2*x + 1"));
  CHECK(f.factors[1].first == U("3*x + 1"));
  CHECK(f.unit == 1);

  f = uni_factor(U("2*x^5 - 2*x"));
  CHECK(f.unit == 2);
  CHECK(f.factors.size() == 4);

  CHECK_THROWS_AS(uni_factor(UniPoly()), InputError);
  CHECK_THROWS_AS(uni_factor(U("x^30 + 1")), DegreeCapError);
}

TEST_CASE("uni_factor on harder inputs") {
  // Swinnerton-Dyer-like: x^4 - 10x^2 + 1 is irreducible but splits mod every prime.
  CHECK(is_irreducible(U("x^4 - 10*x^2 + 1")));
  const UniPoly p = U("(x^4 - 10*x^2 + 1)*(x^3 - 2)^2*(x + 1/3)");
  const auto f = uni_factor(p);
  CHECK(f.expand() == p);
  CHECK(f.factors.size() == 3);
  CHECK(is_irreducible(U("x^12 + x + 1")));
}

TEST_CASE("square-free parts agree with factor multiplicities") {
  Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    const UniPoly a = random_unipoly(rng, 2), b = random_unipoly(rng, 2);
    const UniPoly p = a * a * b;
    const auto parts = square_free_parts(p);
    const auto fac = uni_factor(p);
    for (const auto& [g, m] : fac.factors) {
      int found = 0;
      for (const auto& [s, k] : parts)
        if (divides(g, s)) found = k;
      CHECK(found == m);
    }
  }
}

TEST_CASE("bi_factor examples") {
  auto f = bi_factor(P("u^2 - v^2"));
  CHECK(factor_texts(f) == std::multiset<std::string>{"u + v", "u - v"});
  f = bi_factor(P("(u+v)^2 - 4"));
  CHECK(factor_texts(f) == std::multiset<std::string>{"u + v + 2", "u + v - 2"});
  CHECK(bi_factor(P("u^2 + v^2")).factors.size() == 1);
  f = bi_factor(P("2*u^3*v - 2*u*v^3"));
  CHECK(f.unit == 2);
  CHECK(factor_texts(f) == std::multiset<std::string>{"u", "v", "u + v", "u - v"});
  CHECK_THROWS_AS(bi_factor(BiPoly()), InputError);
  CHECK_THROWS_AS(bi_factor(P("u^13 + v")), DegreeCapError);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(P("u^2 + v")));
  CHECK_FALSE(is_irreducible(P("(u+v)^2")));
  CHECK(is_irreducible(P("u*v - 1")));
  CHECK(is_irreducible(P("2*u + 2*v")));
  CHECK_THROWS_AS(is_irreducible(P("3")), InputError);
}

// Oracle for degree-<=1-per-variable candidates: a factorization of u*v - 1
// would need factors (a u + b)(c v + d) or (a u + b v + c) * const.
TEST_CASE("u*v - 1 has no bilinear split (exhaustive over small integers)") {
  bool split = false;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          const BiPoly cand = (BiPoly::u() * Rational(a) + BiPoly(b)) * (BiPoly::v() * Rational(c) + BiPoly(d));
          if (cand == P("u*v - 1")) split = true;
        }
  CHECK_FALSE(split);
}

TEST_CASE("randomized recovery of planted irreducible factors") {
  Rng rng(2024);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 25; ++i) {
    std::vector<BiPoly> parts;
    const int k = static_cast<int>(rng.uniform(2, 3));
    int deg = 0;
    for (int j = 0; j < k; ++j) {
      BiPoly g = random_bipoly(rng, static_cast<int>(rng.uniform(1, 3)), 0.7, 4);
      if (g.total_degree() < 1 || !is_irreducible(g)) {
        parts.clear();
        break;
      }
      deg += g.total_degree();
      parts.push_back(g.normalized());
    }
    if (parts.empty() || deg > 12) continue;
    BiPoly prod(1);
    std::multiset<std::string> expected;
    for (const auto& g : parts) {
      prod = prod * g;
      expected.insert(g.to_string());
    }
    const auto f = bi_factor(prod);
    CHECK(f.expand() == prod);
    CHECK(factor_texts(f) == expected);
    ++checked;
  }
  CHECK(checked >= 20);
}
