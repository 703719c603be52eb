#include "polyexp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "polyexp/errors.hpp"
#include "polyexp/factor.hpp"
#include "polyexp/rng.hpp"

namespace polyexp {

SetSpec SetSpec::explicit_list(std::vector<Rational> values) {
  SetSpec s;
  s.kind = Kind::explicit_list;
  s.n = static_cast<int>(values.size());
  s.values = std::move(values);
  return s;
}

SetSpec SetSpec::arithmetic(const Rational& start, const Rational& step, int n) {
  SetSpec s;
  s.kind = Kind::arithmetic;
  s.start = start;
  s.step = step;
  s.n = n;
  return s;
}

SetSpec SetSpec::geometric(const Rational& start, const Rational& ratio, int n) {
  SetSpec s;
  s.kind = Kind::geometric;
  s.start = start;
  s.step = ratio;
  s.n = n;
  return s;
}

SetSpec SetSpec::random(std::uint64_t seed, int n, std::int64_t num_range, std::int64_t den_range) {
  SetSpec s;
  s.kind = Kind::random;
  s.seed = seed;
  s.n = n;
  s.num_range = num_range;
  s.den_range = den_range;
  return s;
}

SetSpec SetSpec::with_n(int size) const {
  SetSpec s = *this;
  s.n = size;
  return s;
}

std::string to_string(SetSpec::Kind kind) {
  switch (kind) {
    case SetSpec::Kind::explicit_list: return "explicit";
    case SetSpec::Kind::arithmetic: return "arithmetic";
    case SetSpec::Kind::geometric: return "geometric";
    case SetSpec::Kind::random: return "random";
  }
  return "explicit";
}

RationalSet gen_set(const SetSpec& spec) {
  if (spec.n < 0) throw InputError("set size must be nonnegative");
  std::set<Rational> out;
  switch (spec.kind) {
    case SetSpec::Kind::explicit_list:
      out.insert(spec.values.begin(), spec.values.end());
      break;
    case SetSpec::Kind::arithmetic: {
      if (spec.step.is_zero()) throw InputError("arithmetic set: step must be nonzero");
      Rational x = spec.start;
      for (int i = 0; i < spec.n; ++i, x += spec.step) out.insert(x);
      break;
    }
    case SetSpec::Kind::geometric: {
      if (spec.step.is_zero() || spec.step == 1 || spec.step == -1)
        throw InputError("geometric set: ratio must not be 0, 1 or -1");
      if (spec.start.is_zero() && spec.n > 1) throw InputError("geometric set: start must be nonzero");
      Rational x = spec.start;
      for (int i = 0; i < spec.n; ++i, x *= spec.step) out.insert(x);
      break;
    }
    case SetSpec::Kind::random: {
      const std::int64_t num = spec.num_range > 0 ? spec.num_range : 10 * std::max(spec.n, 1);
      if (spec.den_range < 1) throw InputError("random set: denominator range must be positive");
      Rng rng(spec.seed);
      const long budget = 100L * spec.n + 1000;
      for (long tries = 0; static_cast<int>(out.size()) < spec.n; ++tries) {
        if (tries >= budget) throw InputError("random set: could not draw enough distinct values");
        out.insert(rng.rational(num, spec.den_range));
      }
      break;
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Trimming.

namespace {

// Number of distinct real roots by Sturm's theorem.
int real_root_count(const UniPoly& p) {
  if (p.degree() < 1) return 0;
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  auto changes = [&](bool at_plus) {
    int count = 0, prev = 0;
    for (const UniPoly& s : seq) {
      int sign = s.leading().sign();
      if (!at_plus && s.degree() % 2 == 1) sign = -sign;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

}  // namespace

TrimResult trim_degenerate(const BiPoly& f, const RationalSet& a, const RationalSet& c) {
  TrimResult out;
  for (const Rational& x : a) (f.eval_u(x).is_constant() ? out.removed_a : out.a).push_back(x);

  // Values of the constant fibers f(., z0), z0 real.
  std::vector<UniPoly> dropped_by;  // c is dropped when dropped_by[i](c) has a real root
  std::vector<Rational> constant_values;
  const auto coeffs = f.coeff_decomposition(Var::u).coefficients;
  if (coeffs.empty()) {
    constant_values.emplace_back(0);
  } else if (coeffs.size() == 1) {
    // f depends on v only: every fiber in u is constant.
    dropped_by.push_back(coeffs[0]);
  } else if (coeffs.size() > 1) {
    UniPoly g;
    for (std::size_t k = 1; k < coeffs.size(); ++k) g = gcd(g, coeffs[k]);
    if (!g.is_constant()) {
      for (const auto& [p, mult] : uni_factor(g).factors) {
        if (real_root_count(p) == 0) continue;
        const UniPoly r = divrem(coeffs[0], p).second;
        if (r.is_constant()) constant_values.push_back(r.constant_term());
      }
    }
  }
  for (const Rational& x : c) {
    bool drop = std::find(constant_values.begin(), constant_values.end(), x) != constant_values.end();
    for (const UniPoly& p : dropped_by) {
      const UniPoly shifted = p - UniPoly::constant(x);
      drop = drop || shifted.is_zero() || real_root_count(shifted) > 0;
    }
    (drop ? out.removed_c : out.c).push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting.

namespace {

using ValueCounts = std::unordered_map<Rational, Count, RationalHash>;

// Calls fn(index of b, value) for every (a, b).
template <class Fn>
void for_each_value(const BiPoly& f, const RationalSet& a, const RationalSet& b, Fn&& fn) {
  for (const Rational& x : a) {
    const UniPoly fiber = f.eval_u(x);
    for (std::size_t j = 0; j < b.size(); ++j) fn(j, fiber.eval(b[j]));
  }
}

ValueCounts value_counts(const BiPoly& f, const RationalSet& a, const RationalSet& b) {
  ValueCounts counts;
  for_each_value(f, a, b, [&](std::size_t, const Rational& val) { ++counts[val]; });
  return counts;
}

Count checked(__int128 x) {
  if (x > std::numeric_limits<Count>::max() || x < std::numeric_limits<Count>::min())
    throw InternalError("count overflow");
  return static_cast<Count>(x);
}

}  // namespace

GridReport count_M(const BiPoly& f, const RationalSet& a, const RationalSet& b,
                   const RationalSet& c) {
  GridReport rep;
  rep.size_a = static_cast<Count>(a.size());
  rep.size_b = static_cast<Count>(b.size());
  rep.size_c = static_cast<Count>(c.size());
  std::unordered_map<Rational, Count, RationalHash> in_c;
  for (const Rational& x : c) in_c.emplace(x, 0);
  std::vector<Count> by_b(b.size(), 0);
  for_each_value(f, a, b, [&](std::size_t j, const Rational& val) {
    auto it = in_c.find(val);
    if (it == in_c.end()) return;
    ++it->second;
    ++by_b[j];
    ++rep.m;
  });
  for (const auto& [x, n] : in_c) rep.fibers_by_c[x] = n;
  for (std::size_t j = 0; j < b.size(); ++j) rep.fibers_by_b[b[j]] += by_b[j];
  return rep;
}

GridReport grid_report(const BiPoly& f, const RationalSet& a, const RationalSet& b,
                       const RationalSet& c) {
  GridReport rep = count_M(f, a, b, c);
  const ValueCounts counts = value_counts(f, a, b);
  __int128 q = 0;
  for (const auto& [val, n] : counts) q += static_cast<__int128>(n) * n;
  rep.q = checked(q);
  rep.image_size = static_cast<Count>(counts.size());
  return rep;
}

RationalSet image(const BiPoly& f, const RationalSet& a, const RationalSet& b) {
  std::set<Rational> out;
  for (const auto& [val, n] : value_counts(f, a, b)) out.insert(val);
  return {out.begin(), out.end()};
}

Count count_Q(const BiPoly& f, const RationalSet& a, const RationalSet& b) {
  __int128 q = 0;
  for (const auto& [val, n] : value_counts(f, a, b)) q += static_cast<__int128>(n) * n;
  return checked(q);
}

CsCheck cs_check(const GridReport& r) {
  __int128 sc = 0, sb = 0;
  for (const auto& [x, n] : r.fibers_by_c) sc += static_cast<__int128>(n) * n;
  for (const auto& [x, n] : r.fibers_by_b) sb += static_cast<__int128>(n) * n;
  const __int128 m2 = static_cast<__int128>(r.m) * r.m;
  CsCheck out;
  out.slack_c = checked(sc * r.size_c - m2);
  out.slack_b = checked(sb * r.size_b - m2);
  out.ok = out.slack_c >= 0 && out.slack_b >= 0;
  return out;
}

SzCheck sz_check(const BiPoly& g, const RationalSet& u, const RationalSet& v) {
  if (g.is_zero()) throw InputError("sz_check: zero polynomial");
  SzCheck out;
  for_each_value(g, u, v, [&](std::size_t, const Rational& val) {
    if (val.is_zero()) ++out.zeros;
  });
  out.bound = static_cast<Count>(g.total_degree()) * static_cast<Count>(std::min(u.size(), v.size()));
  out.ok = out.zeros <= out.bound;
  return out;
}

// ---------------------------------------------------------------------------
// Growth.

std::string to_string(GrowthMeasure m) {
  return m == GrowthMeasure::image_size ? "image_size" : "m_over_image";
}

std::vector<int> default_growth_schedule() { return {8, 16, 32, 64}; }

double loglog_slope(const std::vector<std::pair<int, Count>>& points) {
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    if (x <= 0 || y <= 0) throw InputError("loglog_slope: values must be positive");
    const double lx = std::log(static_cast<double>(x)), ly = std::log(static_cast<double>(y));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw InputError("loglog_slope: degenerate schedule");
  return (n * sxy - sx * sy) / den;
}

GrowthFit growth_fit(const BiPoly& f, const SetSpec& family, const std::vector<int>& schedule,
                     GrowthMeasure measure) {
  if (schedule.size() < 3) throw InputError("growth_fit: schedule needs at least 3 sizes");
  for (std::size_t i = 0; i < schedule.size(); ++i)
    if (schedule[i] < 1 || (i > 0 && schedule[i] <= schedule[i - 1]))
      throw InputError("growth_fit: schedule must be positive and strictly increasing");
  if (family.kind == SetSpec::Kind::explicit_list)
    throw InputError("growth_fit: family must be a generated set");

  GrowthFit out;
  out.schedule = schedule;
  out.measure = measure;
  for (int n : schedule) {
    const RationalSet a = gen_set(family.with_n(n));
    Count value = 0;
    if (measure == GrowthMeasure::image_size) {
      value = static_cast<Count>(image(f, a, a).size());
    } else {
      value = count_M(f, a, a, image(f, a, a)).m;
    }
    out.measurements.emplace_back(n, value);
  }
  out.fitted_exponent = loglog_slope(out.measurements);
  return out;
}

// ---------------------------------------------------------------------------
// Sum-product.

SumProductReport sum_product_report(const RationalSet& a, const std::optional<BiPoly>& f) {
  if (a.empty()) throw InputError("sum_product_report: empty set");
  std::unordered_set<Rational, RationalHash> sums, diffs, prods;
  for (const Rational& x : a)
    for (const Rational& y : a) {
      sums.insert(x + y);
      diffs.insert(x - y);
      prods.insert(x * y);
    }
  SumProductReport out;
  out.size_a = static_cast<Count>(a.size());
  out.sum = static_cast<Count>(sums.size());
  out.difference = static_cast<Count>(diffs.size());
  out.product = static_cast<Count>(prods.size());
  if (f) out.f_image = static_cast<Count>(image(*f, a, a).size());
  return out;
}

}  // namespace polyexp
