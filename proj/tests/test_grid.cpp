#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "polyexp/errors.hpp"
#include "polyexp/grid.hpp"
#include "test_support.hpp"

using namespace polyexp;
using namespace polyexp::testing;

namespace {

RationalSet ints(std::initializer_list<int> xs) {
  RationalSet out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

RationalSet range(int n) { return gen_set(SetSpec::arithmetic(0, 1, n)); }

// Frozen from tests/oracles/growth_reference.py.
constexpr Count kRefSizes[] = {35, 126, 462, 1709};
constexpr double kRefExponent = 1.8703430112109742;

}  // namespace

TEST_CASE("gen_set") {
  CHECK(gen_set(SetSpec::arithmetic(0, 1, 4)) == ints({0, 1, 2, 3}));
  CHECK(gen_set(SetSpec::geometric(1, 2, 4)) == ints({1, 2, 4, 8}));
  CHECK(gen_set(SetSpec::explicit_list({Q("1/2"), Q("1/3")})) == RationalSet{Q("1/3"), Q("1/2")});
  CHECK(gen_set(SetSpec::arithmetic(5, -2, 3)) == ints({1, 3, 5}));
  CHECK_THROWS_AS(gen_set(SetSpec::arithmetic(0, 0, 3)), InputError);
  CHECK_THROWS_AS(gen_set(SetSpec::geometric(1, -1, 3)), InputError);
  CHECK_THROWS_AS(gen_set(SetSpec::geometric(1, 1, 3)), InputError);
  CHECK_THROWS_AS(gen_set(SetSpec::random(1, 50, 3, 1)), InputError);

  const RationalSet r1 = gen_set(SetSpec::random(42, 20, 0, 3));
  CHECK(r1.size() == 20);
  CHECK(r1 == gen_set(SetSpec::random(42, 20, 0, 3)));
  CHECK(std::is_sorted(r1.begin(), r1.end()));
}

TEST_CASE("trim_degenerate") {
  auto t = trim_degenerate(P("u*v"), ints({0, 1, 2}), ints({0, 3}));
  CHECK(t.a == ints({1, 2}));
  CHECK(t.removed_a == ints({0}));
  // f(., 0) = 0 is a constant fiber, so c = 0 goes too.
  CHECK(t.c == ints({3}));

  t = trim_degenerate(P("u + v"), ints({-1, 0, 5}), ints({1, 2}));
  CHECK(t.a == ints({-1, 0, 5}));
  CHECK(t.c == ints({1, 2}));

  t = trim_degenerate(P("(u^2 - 1)*v"), ints({-1, 0, 1, 2}), ints({0, 5}));
  CHECK(t.a == ints({0, 2}));
  CHECK(t.removed_a == ints({-1, 1}));
  CHECK(t.c == ints({5}));

  // (v^2 + 1) has no real root, so its constant fiber value is kept.
  t = trim_degenerate(P("u*(v^2 + 1) + 7"), ints({1}), ints({7}));
  CHECK(t.c == ints({7}));
  t = trim_degenerate(P("u*(v^2 - 2) + v^2"), ints({1}), ints({2, 3}));
  CHECK(t.c == ints({3}));

  // At most d_u values leave A.
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const BiPoly f = random_bipoly(rng, 4);
    if (!f.depends_on(Var::v)) continue;
    const auto tr = trim_degenerate(f, range(15), range(3));
    CHECK(static_cast<int>(tr.removed_a.size()) <= f.degree_u());
    for (const Rational& a : tr.a) CHECK_FALSE(f.eval_u(a).is_constant());
  }
}

TEST_CASE("count_M") {
  auto r = count_M(P("u + v"), ints({0, 1}), ints({0, 1}), ints({0, 1}));
  CHECK(r.m == 3);
  CHECK(r.fibers_by_c.at(0) == 1);
  CHECK(r.fibers_by_c.at(1) == 2);
  CHECK(r.fibers_by_b.at(0) == 2);
  CHECK(r.fibers_by_b.at(1) == 1);

  const RationalSet g = gen_set(SetSpec::geometric(1, 2, 4));
  CHECK(count_M(P("u*v"), g, g, image(P("u*v"), g, g)).m == 16);
  CHECK(count_M(P("u + v"), ints({0, 1}), ints({0, 1}), {}).m == 0);
}

TEST_CASE("image and count_Q") {
  for (int n : {1, 5, 17}) {
    const RationalSet a = range(n);
    CHECK(image(P("u + v"), a, a).size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(image(P("(u+v)^2"), a, a).size() == static_cast<std::size_t>(2 * n - 1));
    const RationalSet g = gen_set(SetSpec::geometric(1, 2, n));
    CHECK(image(P("u*v"), g, g).size() == static_cast<std::size_t>(2 * n - 1));
  }
  CHECK(count_Q(P("u + v"), ints({0, 1}), ints({0, 1})) == 6);
  CHECK(count_Q(P("u^3 - v"), ints({4}), ints({9})) == 1);
  CHECK(count_Q(P("u*v"), ints({1, 2}), ints({1, 2})) == 6);
}

TEST_CASE("cs_check") {
  auto r = grid_report(P("u + v"), ints({0, 1}), ints({0, 1}), ints({0, 1}));
  auto cs = cs_check(r);
  CHECK(cs.ok);
  CHECK(cs.slack_c == 1);

  r = grid_report(P("u*v"), ints({1, 2}), ints({3}), ints({3}));
  cs = cs_check(r);
  CHECK(cs.ok);
  CHECK(cs.slack_c == 0);

  // Uniform fibers give equality.
  r = grid_report(P("u - v"), range(4), range(4), ints({0}));
  CHECK(cs_check(r).slack_c == 0);
}

TEST_CASE("sz_check") {
  for (int n : {1, 6, 20}) {
    const RationalSet s = gen_set(SetSpec::arithmetic(1, 1, n));
    auto z = sz_check(P("u - v"), s, s);
    CHECK(z.zeros == n);
    CHECK(z.ok);
    z = sz_check(P("u*v - 1"), s, s);
    CHECK(z.zeros == 1);
    CHECK(z.bound == 2 * n);
  }
  const auto z = sz_check(P("(u-v)*(u+v)"), ints({-1, 0, 1}), ints({-1, 0, 1}));
  CHECK(z.zeros == 5);
  CHECK(z.bound == 6);
  CHECK_THROWS_AS(sz_check(BiPoly(), ints({1}), ints({1})), InputError);

  Rng rng(100);
  for (int i = 0; i < 100; ++i) {
    BiPoly g = random_bipoly(rng, static_cast<int>(rng.uniform(1, 6)), 0.5, 3);
    if (g.is_zero()) g = P("u - v");
    const auto u = gen_set(SetSpec::random(rng.next(), static_cast<int>(rng.uniform(1, 50)), 30, 1));
    const auto v = gen_set(SetSpec::random(rng.next(), static_cast<int>(rng.uniform(1, 50)), 30, 1));
    CHECK(sz_check(g, u, v).ok);
  }
}

TEST_CASE("grid invariants on random inputs") {
  Rng rng(55);
  for (int i = 0; i < 40; ++i) {
    const BiPoly f = random_bipoly(rng, 3, 0.6, 3);
    const auto a = gen_set(SetSpec::random(rng.next(), static_cast<int>(rng.uniform(0, 12)), 8, 2));
    const auto b = gen_set(SetSpec::random(rng.next(), static_cast<int>(rng.uniform(0, 12)), 8, 2));
    const auto c = gen_set(SetSpec::random(rng.next(), static_cast<int>(rng.uniform(0, 12)), 20, 1));
    const auto rep = grid_report(f, a, b, c);
    Count sc = 0, sb = 0;
    for (const auto& [x, n] : rep.fibers_by_c) sc += n;
    for (const auto& [x, n] : rep.fibers_by_b) sb += n;
    CHECK(sc == rep.m);
    CHECK(sb == rep.m);
    CHECK(cs_check(rep).ok);
    const Count ab = rep.size_a * rep.size_b;
    CHECK(count_M(f, a, b, image(f, a, b)).m == ab);
    if (rep.image_size > 0) CHECK(rep.q * rep.image_size >= ab * ab);

    // Monotone under inclusion.
    if (!a.empty()) {
      const RationalSet a2(a.begin(), a.end() - 1);
      CHECK(image(f, a2, b).size() <= image(f, a, b).size());
      CHECK(count_M(f, a2, b, c).m <= rep.m);
    }
  }
}

TEST_CASE("collapse laws for special forms with linear witnesses") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const UniPoly h = random_unipoly(rng, static_cast<int>(rng.uniform(1, 3)));
    const Rational al = 1 + rng.uniform(0, 3), be = 1 + rng.uniform(0, 3);
    const BiPoly f = compose(h, P("u") * al + P("v") * be);
    for (int n : {4, 9}) {
      // phi(A) and psi(B) are progressions with a common step.
      const auto a = gen_set(SetSpec::arithmetic(0, be, n));
      const auto b = gen_set(SetSpec::arithmetic(1, al, n));
      CHECK(static_cast<int>(image(f, a, b).size()) <= h.degree() * (2 * n - 1));
    }
    const BiPoly g = compose(h, P("u*v") * al);
    const auto geo = gen_set(SetSpec::geometric(1, 3, 6));
    CHECK(static_cast<int>(image(g, geo, geo).size()) <= h.degree() * 11);
  }
}

TEST_CASE("growth_fit") {
  auto fit = growth_fit(P("u + v"), SetSpec::arithmetic(0, 1, 0), default_growth_schedule());
  for (const auto& [n, val] : fit.measurements) CHECK(val == 2 * n - 1);
  CHECK(std::abs(fit.fitted_exponent - 1.0) < 0.05);

  fit = growth_fit(P("u*v"), SetSpec::geometric(1, 2, 0), {4, 8, 16});
  CHECK(std::abs(fit.fitted_exponent - 1.0) < 0.1);

  fit = growth_fit(P("u^2 + u*v + v^2"), SetSpec::arithmetic(0, 1, 0), default_growth_schedule());
  for (std::size_t i = 0; i < 4; ++i) CHECK(fit.measurements[i].second == kRefSizes[i]);
  CHECK(std::abs(fit.fitted_exponent - kRefExponent) < 1e-9);
  CHECK(fit.fitted_exponent > 1.2);

  fit = growth_fit(P("u + v"), SetSpec::arithmetic(0, 1, 0), {2, 4, 8}, GrowthMeasure::m_over_image);
  for (const auto& [n, val] : fit.measurements) CHECK(val == Count{n} * n);

  CHECK_THROWS_AS(growth_fit(P("u"), SetSpec::arithmetic(0, 1, 0), {2, 4}), InputError);
  CHECK_THROWS_AS(growth_fit(P("u"), SetSpec::arithmetic(0, 1, 0), {2, 4, 4}), InputError);
}

TEST_CASE("sum_product_report") {
  const auto a = gen_set(SetSpec::arithmetic(1, 1, 6));
  auto r = sum_product_report(a);
  CHECK(r.sum == 11);
  CHECK(r.difference == 11);
  // Products of {1..6}: brute force.
  std::set<int> prods;
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) prods.insert(x * y);
  CHECK(r.product == static_cast<Count>(prods.size()));
  CHECK_FALSE(r.f_image.has_value());

  r = sum_product_report(gen_set(SetSpec::geometric(1, 2, 7)));
  CHECK(r.product == 13);

  r = sum_product_report(ints({1, 2}), P("u + v"));
  REQUIRE(r.f_image.has_value());
  CHECK(*r.f_image == 3);
  CHECK_THROWS_AS(sum_product_report({}), InputError);
}
