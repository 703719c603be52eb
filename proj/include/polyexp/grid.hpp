#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyexp/bipoly.hpp"
#include "polyexp/rational.hpp"

namespace polyexp {

using RationalSet = std::vector<Rational>;
using Count = std::int64_t;

/// Recipe for a finite set of rationals.
struct SetSpec {
  enum class Kind { explicit_list, arithmetic, geometric, random };

  Kind kind = Kind::explicit_list;
  std::vector<Rational> values;  // explicit_list
  Rational start;                // arithmetic, geometric
  Rational step;                 // arithmetic step or geometric ratio
  int n = 0;
  std::uint64_t seed = 0;        // random
  std::int64_t num_range = 0;    // random: numerators in [-num_range, num_range]
  std::int64_t den_range = 1;    // random: denominators in [1, den_range]

  static SetSpec explicit_list(std::vector<Rational> values);
  static SetSpec arithmetic(const Rational& start, const Rational& step, int n);
  static SetSpec geometric(const Rational& start, const Rational& ratio, int n);
  /// num_range defaults to 10 * n when zero.
  static SetSpec random(std::uint64_t seed, int n, std::int64_t num_range = 0,
                        std::int64_t den_range = 1);

  /// Same recipe with a different size. Not meaningful for explicit lists.
  SetSpec with_n(int size) const;
};

std::string to_string(SetSpec::Kind kind);

/// Distinct values, sorted ascending. Throws InputError on invalid specs or
/// when random generation cannot find n distinct values.
RationalSet gen_set(const SetSpec& spec);

struct TrimResult {
  RationalSet a;
  RationalSet c;
  RationalSet removed_a;
  RationalSet removed_c;
};

/// Drops every a with f(a, .) constant, and every c equal to the constant
/// value of some fiber f(., z0) with z0 real.
TrimResult trim_degenerate(const BiPoly& f, const RationalSet& a, const RationalSet& c);

struct GridReport {
  Count m = 0;
  std::map<Rational, Count> fibers_by_c;  // M_c for every c in C
  std::map<Rational, Count> fibers_by_b;  // M_b for every b in B
  Count q = 0;
  Count image_size = 0;
  Count size_a = 0;
  Count size_b = 0;
  Count size_c = 0;
};

/// M and both fiber maps; q and image_size stay zero.
GridReport count_M(const BiPoly& f, const RationalSet& a, const RationalSet& b,
                   const RationalSet& c);
/// count_M plus Q and the image size.
GridReport grid_report(const BiPoly& f, const RationalSet& a, const RationalSet& b,
                       const RationalSet& c);

RationalSet image(const BiPoly& f, const RationalSet& a, const RationalSet& b);
Count count_Q(const BiPoly& f, const RationalSet& a, const RationalSet& b);

/// slack = right side minus left side; ok when both are nonnegative.
struct CsCheck {
  bool ok = false;
  Count slack_c = 0;  // (sum_c M_c^2) |C| - M^2
  Count slack_b = 0;  // (sum_b M_b^2) |B| - M^2
};
CsCheck cs_check(const GridReport& report);

struct SzCheck {
  bool ok = false;
  Count zeros = 0;
  Count bound = 0;  // deg g * min(|U|, |V|)
};
/// Throws InputError on the zero polynomial.
SzCheck sz_check(const BiPoly& g, const RationalSet& u, const RationalSet& v);

enum class GrowthMeasure { image_size, m_over_image };

std::string to_string(GrowthMeasure m);

struct GrowthFit {
  std::vector<int> schedule;
  std::vector<std::pair<int, Count>> measurements;
  double fitted_exponent = 0.0;
  GrowthMeasure measure = GrowthMeasure::image_size;
};

std::vector<int> default_growth_schedule();

/// A = B = gen_set(family.with_n(n)) for each n in schedule. The schedule
/// must be strictly increasing with at least 3 entries.
GrowthFit growth_fit(const BiPoly& f, const SetSpec& family, const std::vector<int>& schedule,
                     GrowthMeasure measure = GrowthMeasure::image_size);

/// Unweighted least-squares slope of log(y) against log(x), natural logs.
double loglog_slope(const std::vector<std::pair<int, Count>>& points);

struct SumProductReport {
  Count size_a = 0;
  Count sum = 0;
  Count difference = 0;
  Count product = 0;
  std::optional<Count> f_image;
};

/// Throws InputError on an empty set.
SumProductReport sum_product_report(const RationalSet& a, const std::optional<BiPoly>& f = {});

}  // namespace polyexp
