#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "polyexp/apps.hpp"
#include "polyexp/curves.hpp"
#include "polyexp/errors.hpp"
#include "polyexp/grid.hpp"
#include "polyexp/parse.hpp"
#include "polyexp/structure.hpp"
#include "polyexp/verify.hpp"

namespace polyexp::verify {

namespace {

BiPoly random_poly(Rng& rng, int max_degree, int density_pct, std::int64_t coeff) {
  BiPoly::Terms t;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = 0; i <= d; ++i)
      if (rng.uniform(0, 99) < density_pct) {
        const Rational c = rng.rational(coeff, 2);
        if (!c.is_zero()) t.emplace(Monomial{i, d - i}, c);
      }
  return BiPoly(std::move(t));
}

UniPoly random_uni(Rng& rng, int degree, std::int64_t coeff = 4) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(rng.uniform(-coeff, coeff));
  while (c.back().is_zero()) c.back() = Rational(rng.uniform(1, coeff));
  return UniPoly(std::move(c));
}

RationalSet random_set(Rng& rng, int max_size, std::int64_t num, std::int64_t den) {
  return gen_set(SetSpec::random(rng.next(), static_cast<int>(rng.uniform(1, max_size)), num, den));
}

ParamCurve random_curve(Rng& rng, int max_dim, int max_degree) {
  ParamCurve c;
  const int d = static_cast<int>(rng.uniform(1, max_dim));
  for (int k = 0; k < d; ++k) c.coords.push_back(random_uni(rng, static_cast<int>(rng.uniform(1, max_degree))));
  return c;
}

// Line with a possibly nonlinear parametrization.
ParamCurve random_line(Rng& rng, int max_dim, int max_degree) {
  ParamCurve c;
  const UniPoly w = random_uni(rng, static_cast<int>(rng.uniform(1, max_degree)));
  const int d = static_cast<int>(rng.uniform(1, max_dim));
  for (int k = 0; k < d; ++k) {
    Rational alpha = rng.rational(4, 2);
    if (k == 0 && alpha.is_zero()) alpha = 1;
    c.coords.push_back(w * alpha + UniPoly::constant(rng.rational(4, 2)));
  }
  return c;
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

struct Outcome {
  bool passed;
  std::string detail;
};

// --- 1 ---------------------------------------------------------------------
Outcome detector_round_trip(Rng& rng) {
  const auto start = std::chrono::steady_clock::now();
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    const BiPoly f = random_special(rng, i % 2 == 1, 12);
    const SpecialForm sf = detect_special(f);
    if (sf.kind != SpecialKind::none && sf.recompose() == f) ++ok;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {ok == 200 && secs < 60.0,
          std::to_string(ok) + "/200 recomposed exactly" + (secs < 60.0 ? "" : ", over the 60 s limit")};
}

// --- 2 ---------------------------------------------------------------------
Outcome detector_soundness(Rng& rng) {
  int special = 0, bad = 0;
  for (int i = 0; i < 500; ++i) {
    BiPoly f;
    switch (i % 4) {
      case 0: f = random_poly(rng, static_cast<int>(rng.uniform(1, 6)), 50, 5); break;
      case 1: f = random_special(rng, rng.coin(), 9); break;
      case 2:
        f = random_special(rng, rng.coin(), 9) +
            BiPoly::monomial(rng.rational(3, 2), static_cast<int>(rng.uniform(0, 3)),
                             static_cast<int>(rng.uniform(0, 3)));
        break;
      default:
        f = random_special(rng, rng.coin(), 9)
                .affine(1 + rng.uniform(0, 3), rng.rational(3, 2), -1 - rng.uniform(0, 3), rng.rational(3, 2));
        break;
    }
    if (f.is_zero()) f = BiPoly::u();
    try {
      const SpecialForm sf = detect_special(f);
      if (sf.kind == SpecialKind::none) continue;
      ++special;
      if (sf.recompose() != f) ++bad;
    } catch (const InternalError&) {
      ++bad;
    }
  }
  return {bad == 0, "500 inputs, " + std::to_string(special) + " non-none verdicts, " +
                        std::to_string(bad) + " unverified witnesses"};
}

// --- 3 ---------------------------------------------------------------------
Outcome non_special_corpus(Rng& rng) {
  std::vector<BiPoly> corpus{parse_poly("u^2 + u*v + v^2")};
  for (int k = 3; k <= 8; ++k) corpus.push_back(slope_poly(UniPoly::monomial(1, k)));
  int curves = 0;
  while (curves < 10) {
    ParamCurve c = random_curve(rng, 3, 3);
    if (c.coords.size() < 2 || is_line_param(c)) continue;
    corpus.push_back(dist_poly(c));
    ++curves;
  }
  int none = 0, oracle_used = 0, oracle_none = 0;
  for (const BiPoly& f : corpus) {
    if (detect_special(f).kind == SpecialKind::none) ++none;
    const OracleResult r = oracle_special(f, 6);
    if (!r.applicable) continue;
    ++oracle_used;
    if (r.kind == SpecialKind::none) ++oracle_none;
  }
  // The oracle must also find witnesses where they exist.
  int planted = 0, found = 0;
  for (int i = 0; i < 40; ++i) {
    const BiPoly f = random_special(rng, i % 2 == 1, 6);
    ++planted;
    const OracleResult r = oracle_special(f, 6);
    if (r.kind != SpecialKind::none && r.kind != SpecialKind::degenerate_u &&
        r.kind != SpecialKind::degenerate_v)
      ++found;
  }
  const int total = static_cast<int>(corpus.size());
  std::ostringstream d;
  d << none << "/" << total << " none; oracle (degree <= 6) agrees on " << oracle_none << "/"
    << oracle_used << "; oracle recovers " << found << "/" << planted << " planted forms";
  return {none == total && oracle_none == oracle_used && found == planted, d.str()};
}

// --- 4 ---------------------------------------------------------------------
Outcome stein_property(Rng& rng) {
  int checked = 0, ok = 0, worst_gap = 1 << 30;
  while (checked < 50) {
    const BiPoly f = random_poly(rng, static_cast<int>(rng.uniform(2, 4)), 50, 3);
    if (f.total_degree() < 2 || bi_decompose(f, rng).has_value()) continue;
    const auto rep = stein_count(f, stein_default_sample(f.total_degree()));
    const int count = static_cast<int>(rep.reducible_lambdas.size());
    if (count < f.total_degree()) ++ok;
    worst_gap = std::min(worst_gap, f.total_degree() - count);
    ++checked;
  }
  return {ok == 50, std::to_string(ok) + "/50 below deg f (smallest margin " + std::to_string(worst_gap) + ")"};
}

// --- 5 ---------------------------------------------------------------------
Outcome grid_identities(Rng& rng) {
  int ok = 0;
  for (int i = 0; i < 30; ++i) {
    const BiPoly f = random_poly(rng, static_cast<int>(rng.uniform(1, 4)), 60, 4);
    const RationalSet a = random_set(rng, 24, 12, 2), b = random_set(rng, 24, 12, 2);
    const RationalSet img = image(f, a, b);
    const Count ab = static_cast<Count>(a.size() * b.size());
    const bool m_ok = count_M(f, a, b, img).m == ab;
    RationalSet c = img;
    if (c.size() > 5) c.resize(c.size() / 2);
    const RationalSet extra = random_set(rng, 10, 30, 1);
    c.insert(c.end(), extra.begin(), extra.end());
    const auto rep = grid_report(f, a, b, gen_set(SetSpec::explicit_list(c)));
    const bool cs_ok = cs_check(rep).ok;
    const bool q_ok = rep.q * rep.image_size >= ab * ab;
    if (m_ok && cs_ok && q_ok) ++ok;
  }
  return {ok == 30, std::to_string(ok) + "/30 instances satisfy M = |A||B|, both Cauchy-Schwarz bounds and Q |f(A,B)| >= (|A||B|)^2"};
}

// --- 6 ---------------------------------------------------------------------
Outcome schwartz_zippel(Rng& rng) {
  int ok = 0;
  Count max_zeros = 0;
  for (int i = 0; i < 100; ++i) {
    BiPoly g = random_poly(rng, static_cast<int>(rng.uniform(1, 6)), 50, 3);
    if (g.is_constant()) g = g + BiPoly::u() - BiPoly::v();
    // Bias towards many zeros by planting a linear factor.
    if (i % 3 == 0) g = g * (BiPoly::u() - BiPoly::v() * Rational(rng.uniform(1, 2)));
    if (g.total_degree() > 6) g = BiPoly::u() - BiPoly::v();
    const RationalSet u = random_set(rng, 50, 25, 1), v = random_set(rng, 50, 25, 1);
    const SzCheck s = sz_check(g, u, v);
    if (s.ok) ++ok;
    max_zeros = std::max(max_zeros, s.zeros);
  }
  return {ok == 100, std::to_string(ok) + "/100 within deg g * min(|U|,|V|) (max zeros seen " +
                         std::to_string(max_zeros) + ")"};
}

// --- 7 ---------------------------------------------------------------------
Outcome incidence_inequality(Rng& rng) {
  int done = 0, ok = 0, attempts = 0;
  Count tightest = -1;
  while (done < 20 && attempts < 400) {
    ++attempts;
    const BiPoly f = random_poly(rng, static_cast<int>(rng.uniform(2, 3)), 55, 3);
    if (!f.depends_on(Var::u) || !f.depends_on(Var::v)) continue;
    const RationalSet a0 = random_set(rng, 12, 6, 1), b = random_set(rng, 12, 6, 1);
    RationalSet img = image(f, a0, b);
    // Take C mostly from the image so that the fibers are populated.
    RationalSet c0;
    for (std::size_t i = 0; i < img.size() && c0.size() < 10; i += 1 + img.size() / 10) c0.push_back(img[i]);
    c0.push_back(Rational(rng.uniform(-20, 20)));
    c0 = gen_set(SetSpec::explicit_list(c0));
    const TrimResult t = trim_degenerate(f, a0, c0);
    if (t.a.empty() || t.c.empty()) continue;
    try {
      const CsIncidenceCheck r = cs_incidence_check(f, t.a, b, t.c);
      ++done;
      if (r.ok) ++ok;
      const Count slack = r.rhs - r.lhs;
      if (tightest < 0 || slack < tightest) tightest = slack;
    } catch (const DegreeCapError&) {
    } catch (const InputError&) {
    }
  }
  return {done == 20 && ok == 20, std::to_string(ok) + "/" + std::to_string(done) +
                                      " trimmed instances satisfy sum M_b^2 <= d_v I + d_u^2 |B| (smallest slack " +
                                      std::to_string(tightest) + ")"};
}

// --- 8 ---------------------------------------------------------------------
Outcome lemma_identity(Rng& rng) {
  int ok = 0, built = 0;
  while (built < 50) {
    Rational alpha = rng.rational(5, 3), beta = rng.rational(5, 3), lambda = rng.rational(5, 3);
    if (alpha.is_zero() || beta.is_zero() || lambda.is_zero()) continue;
    const UniPoly p = random_uni(rng, static_cast<int>(rng.uniform(1, 4)));
    const UniPoly q = random_uni(rng, static_cast<int>(rng.uniform(1, 4)));
    // P(alpha x) - P(beta y) is divisible by alpha x - beta y.
    const BiPoly f = BiPoly::lift(p.affine(alpha, 0), Var::u) - BiPoly::lift(p.affine(beta, 0), Var::v);
    const BiPoly g =
        (BiPoly::lift(q.affine(alpha, 0), Var::u) - BiPoly::lift(q.affine(beta, 0), Var::v)) * lambda;
    if (f.is_zero() || g.is_zero()) continue;
    ++built;
    try {
      if (lemma_common_check(f, g).ok) ++ok;
    } catch (const InputError&) {
    }
  }
  return {ok == 50, std::to_string(ok) + "/50 pairs satisfy (a1/b1)^d2 = (a2/b2)^d1"};
}

// --- 9 ---------------------------------------------------------------------
Outcome associated_h_cases(Rng&) {
  int cases = 0;
  const AssociatedH deg = associated_h(parse_poly("u + v^2"));
  if (deg.kind == HCase::degenerate && deg.h == parse_poly("u + v^2")) ++cases;
  const AssociatedH mul = associated_h(parse_poly("u*v"));
  if (mul.kind == HCase::multiplicative && mul.k == 1 && mul.e_prime == 1 && mul.h == parse_poly("u*v")) ++cases;
  const AssociatedH add = associated_h(parse_poly("u^2 + u*v"));
  if (add.kind == HCase::additive && add.k == 1 && add.e == 1 && add.ell == 1 && add.h == parse_poly("u + v"))
    ++cases;

  const BiPoly f = parse_poly("(u+v)^2");
  const RationalSet s = gen_set(SetSpec::arithmetic(0, 1, 6));
  const CurveFamily fam = make_family(f, FamilyKind::standard, product_pairs(s, s));
  const ComponentReport rep = shared_components(fam);
  QuadrupleCheck q;
  bool popular = false;
  for (const Component& c : rep.components)
    if (c.poly == parse_poly("u - v")) {
      popular = c.popular;
      q = associated_h_on_component(fam, c, associated_h(f).h, gen_set(SetSpec::arithmetic(-6, 1, 13)));
    }
  std::ostringstream d;
  d << cases << "/3 worked cases match; diagonal component x - y of the (u+v)^2 family "
    << (popular ? "popular" : "NOT popular") << ", h(a,p) = h(b,q) on " << (q.checked - q.violations) << "/"
    << q.checked << " quadruples";
  return {cases == 3 && popular && q.checked > 0 && q.violations == 0, d.str()};
}

// --- 10 --------------------------------------------------------------------
Outcome collapse_vs_growth(Rng&) {
  const auto schedule = default_growth_schedule();
  const GrowthFit add = growth_fit(parse_poly("u + v"), SetSpec::arithmetic(0, 1, 0), schedule);
  const GrowthFit mul = growth_fit(parse_poly("u*v"), SetSpec::geometric(1, 2, 0), schedule);
  const GrowthFit gen = growth_fit(parse_poly("u^2 + u*v + v^2"), SetSpec::arithmetic(0, 1, 0), schedule);
  bool exact = true;
  for (const auto* fit : {&add, &mul})
    for (const auto& [n, v] : fit->measurements) exact = exact && v == 2 * Count{n} - 1;
  const bool lin = std::abs(add.fitted_exponent - 1) < 0.05 && std::abs(mul.fitted_exponent - 1) < 0.05;
  const bool ref = std::abs(gen.fitted_exponent - kGrowthReferenceExponent) < 0.02 && gen.fitted_exponent > 1.2;
  std::ostringstream d;
  d << "images 2n-1 " << (exact ? "exact" : "MISMATCH") << "; exponents u+v " << fmt("%.4f", add.fitted_exponent)
    << ", uv " << fmt("%.4f", mul.fitted_exponent) << ", u^2+uv+v^2 " << fmt("%.4f", gen.fitted_exponent)
    << " (reference " << fmt("%.4f", kGrowthReferenceExponent) << ")";
  return {exact && lin && ref, d.str()};
}

// --- 11 --------------------------------------------------------------------
Outcome applications(Rng& rng) {
  bool collinear = true;
  for (int n : {5, 10, 20}) {
    ParamCurve line{{UniPoly{1, 2}, UniPoly{0, -3}}};
    std::vector<Rational> params;
    for (int i = 0; i < n; ++i) params.emplace_back(i);
    collinear = collinear && distinct_distances_count(line, params) == n - 1;
  }
  int agree = 0, lines = 0;
  for (int i = 0; i < 100; ++i) {
    const ParamCurve c = i % 3 == 0 ? random_line(rng, 4, 4) : random_curve(rng, 4, 4);
    const bool line = is_line_param(c);
    lines += line ? 1 : 0;
    if ((detect_special(dist_poly(c)).kind != SpecialKind::none) == line) ++agree;
  }
  const bool slope = special_form_bridge_slope(UniPoly::monomial(1, 3)).form.kind == SpecialKind::none;
  std::ostringstream d;
  d << "collinear distances n-1 " << (collinear ? "exact" : "MISMATCH") << "; line dichotomy " << agree
    << "/100 (" << lines << " lines); slope(x^3) " << (slope ? "none" : "SPECIAL");
  return {collinear && agree == 100 && slope, d.str()};
}

struct Entry {
  const char* name;
  std::function<Outcome(Rng&)> run;
};

const Entry kSuites[kSuiteCount] = {
    {"detector round-trip", detector_round_trip},
    {"detector soundness under fuzz", detector_soundness},
    {"non-special corpus", non_special_corpus},
    {"Stein property", stein_property},
    {"grid identities", grid_identities},
    {"Schwartz-Zippel", schwartz_zippel},
    {"incidence inequality", incidence_inequality},
    {"common-factor leading identity", lemma_identity},
    {"associated h construction", associated_h_cases},
    {"collapse vs growth", collapse_vs_growth},
    {"applications", applications},
};

}  // namespace

SuiteResult run_suite(int id, std::uint64_t seed) {
  if (id < 1 || id > kSuiteCount) throw InputError("unknown suite " + std::to_string(id));
  const Entry& e = kSuites[id - 1];
  SuiteResult r;
  r.id = id;
  r.name = e.name;
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = e.run(rng);
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_line(const SuiteResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << " " << r.name << ": "
      << r.detail << " [" << fmt("%.2f", r.seconds) << " s]";
  return out.str();
}

}  // namespace polyexp::verify
