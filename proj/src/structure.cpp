#include "polyexp/structure.hpp"

#include <algorithm>
#include <set>

#include "polyexp/errors.hpp"
#include "polyexp/gcd.hpp"

namespace polyexp {

std::string to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::additive: return "additive";
    case SpecialKind::multiplicative: return "multiplicative";
    case SpecialKind::degenerate_u: return "degenerate-u";
    case SpecialKind::degenerate_v: return "degenerate-v";
    case SpecialKind::none: return "none";
  }
  return "none";
}

std::string to_string(HCase c) {
  switch (c) {
    case HCase::additive: return "additive";
    case HCase::multiplicative: return "multiplicative";
    case HCase::degenerate: return "degenerate";
  }
  return "degenerate";
}

BiPoly SpecialForm::inner() const {
  const BiPoly a = BiPoly::lift(phi, Var::u), b = BiPoly::lift(psi, Var::v);
  return kind == SpecialKind::multiplicative ? a * b : a + b;
}

BiPoly SkewForm::recompose() const {
  return BiPoly::u() * BiPoly::lift(p, Var::u) * BiPoly::lift(q, Var::v) + BiPoly::lift(r, Var::v);
}

// ---------------------------------------------------------------------------
// Membership in Q[g] by leading-form peeling.

std::optional<UniPoly> membership_in(const BiPoly& f, const BiPoly& g) {
  if (g.is_constant()) throw InputError("membership_in: g must be non-constant");
  if (f.is_zero()) return UniPoly();
  const int dg = g.total_degree(), df = f.total_degree();
  if (df % dg != 0) return std::nullopt;
  const int m = df / dg;

  std::vector<BiPoly> powers{BiPoly(1)};
  for (int j = 1; j <= m; ++j) powers.push_back(powers.back() * g);
  const BiPoly top_g = lt_poly(g);
  const Rational lc_g = g.leading_term().second;

  std::vector<Rational> r(m + 1);
  BiPoly rem = f;
  for (int j = m; j >= 0 && !rem.is_zero(); --j) {
    const int target = j * dg;
    if (rem.total_degree() > target) return std::nullopt;
    if (rem.total_degree() < target) continue;
    const Rational c = rem.leading_term().second / lc_g.pow(static_cast<unsigned>(j));
    if (lt_poly(rem) != c * top_g.pow(static_cast<unsigned>(j))) return std::nullopt;
    rem -= c * powers[j];
    r[j] = c;
  }
  if (!rem.is_zero()) return std::nullopt;

  UniPoly out(std::move(r));
  if (compose(out, g) != f) throw InternalError("membership_in: recomposition mismatch");
  return out;
}

// ---------------------------------------------------------------------------
// Functional decomposition.

std::optional<Decomposition> bi_decompose(const BiPoly& f, Rng& rng, const FactorConfig& config) {
  const int d = f.total_degree();
  if (d < 2) throw InputError("bi_decompose: total degree must be at least 2");

  const Rational a = rng.rational(9, 3), b = rng.rational(9, 3);
  const BiFactorization fac = bi_factor(f - BiPoly(f.eval(a, b)), config);

  // Every divisor prod p_i^{k_i} of the shifted polynomial.
  std::vector<BiPoly> candidates;
  std::vector<int> k(fac.factors.size(), 0);
  for (;;) {
    int deg = 0;
    for (std::size_t i = 0; i < k.size(); ++i) deg += k[i] * fac.factors[i].first.total_degree();
    if (deg >= 1 && 2 * deg <= d && d % deg == 0) {
      BiPoly g(1);
      for (std::size_t i = 0; i < k.size(); ++i) g = g * fac.factors[i].first.pow(k[i]);
      candidates.push_back(std::move(g));
    }
    std::size_t i = 0;
    while (i < k.size() && k[i] == fac.factors[i].second) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const BiPoly& x, const BiPoly& y) {
    return x.total_degree() < y.total_degree();
  });

  for (const BiPoly& g : candidates) {
    BiPoly q = g - BiPoly(g.constant_term());
    q *= q.leading_term().second.inverse();
    if (auto r = membership_in(f, q)) {
      Decomposition dec{std::move(*r), std::move(q)};
      if (dec.outer.degree() < 2 || dec.recompose() != f)
        throw InternalError("bi_decompose: invalid decomposition");
      return dec;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reducible level sets.

std::vector<Rational> stein_default_sample(int degree) {
  std::vector<Rational> out;
  const int n = 10 * std::max(degree, 0);
  for (int i = 0; static_cast<int>(out.size()) < n; ++i) {
    out.emplace_back(i);
    if (i > 0 && static_cast<int>(out.size()) < n) out.emplace_back(-i);
  }
  return out;
}

SteinReport stein_count(const BiPoly& f, const std::vector<Rational>& sample,
                        const FactorConfig& config) {
  if (f.is_constant()) throw InputError("stein_count: f must be non-constant");
  std::set<Rational> seen(sample.begin(), sample.end());
  if (seen.size() != sample.size()) throw InputError("stein_count: duplicate sample values");

  SteinReport rep;
  rep.sample = sample;
  rep.degree = f.total_degree();
  for (const Rational& lambda : sample)
    if (!is_irreducible(f - BiPoly(lambda), config)) rep.reducible_lambdas.push_back(lambda);
  return rep;
}

// ---------------------------------------------------------------------------
// Separated ratio f_u / f_v.

namespace {

// 0, 1, -1, 2, -2, ...
Rational probe(int i) { return Rational(i % 2 == 1 ? (i + 1) / 2 : -(i / 2)); }

bool splits(const BiPoly& p, const Rational& u0, const Rational& v0) {
  const BiPoly lhs = p * p.eval(u0, v0);
  const BiPoly rhs = BiPoly::lift(p.eval_v(v0), Var::u) * BiPoly::lift(p.eval_u(u0), Var::v);
  return lhs == rhs;
}

}  // namespace

std::optional<SeparatedRatio> separated_ratio(const BiPoly& f) {
  if (!f.depends_on(Var::u) || !f.depends_on(Var::v))
    throw InputError("separated_ratio: f must depend on both variables");

  const BiPoly fu = f.partial(Var::u), fv = f.partial(Var::v);
  const BiPoly g = bi_gcd(fu, fv);
  const BiPoly p = *divide_exact(fu, g), q = *divide_exact(fv, g);

  // A nonzero polynomial cannot vanish on a (deg+1) x (deg+1) grid.
  const int span = 2 * (p.total_degree() + q.total_degree()) + 3;
  Rational u0, v0;
  bool found = false;
  for (int i = 0; i < span && !found; ++i)
    for (int j = 0; j < span && !found; ++j) {
      u0 = probe(i);
      v0 = probe(j);
      found = !p.eval(u0, v0).is_zero() && !q.eval(u0, v0).is_zero();
    }
  if (!found) throw InternalError("separated_ratio: no anchor found");
  if (!splits(p, u0, v0) || !splits(q, u0, v0)) return std::nullopt;

  const UniPoly pu = p.eval_v(v0), pv = p.eval_u(u0);
  const UniPoly qu = q.eval_v(v0), qv = q.eval_u(u0);
  const Rational scale = pu.leading() / qu.leading() * q.eval(u0, v0) / p.eval(u0, v0) / qv.leading();

  SeparatedRatio out{pu.monic(), qu.monic(), pv * scale, qv.monic()};
  return out;
}

// ---------------------------------------------------------------------------
// Special forms.

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
  mpz_class n, d;
  mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rational(n, d);
}

struct LogTerm {
  UniPoly p;
  Rational t;
};

// Writes num/den = sum t_i p_i'/p_i over the monic irreducible factors p_i of
// a square-free den, or returns none.
std::optional<std::vector<LogTerm>> log_derivative_terms(const UniPoly& num, const UniPoly& den,
                                                         const FactorConfig& config) {
  if (den.is_constant() || num.is_zero()) return std::nullopt;
  const UniFactorization fac = uni_factor(den, config);
  std::vector<LogTerm> out;
  UniPoly sum;
  for (const auto& [raw, mult] : fac.factors) {
    if (mult != 1) return std::nullopt;
    const UniPoly p = raw.monic();
    UniPoly cof;
    divides(p, den, &cof);
    const UniPoly target = p.derivative() * cof;
    const UniPoly r1 = divrem(num, p).second, r2 = divrem(target, p).second;
    if (r1.is_zero()) return std::nullopt;
    const Rational t = r1.leading() / r2.leading();
    if (r1 != r2 * t) return std::nullopt;
    sum += target * t;
    out.push_back({p, t});
  }
  if (sum != num) return std::nullopt;
  return out;
}

std::optional<SpecialForm> confirm(const BiPoly& f, SpecialKind kind, UniPoly phi, UniPoly psi) {
  SpecialForm sf{kind, UniPoly(), std::move(phi), std::move(psi)};
  const BiPoly w = sf.inner();
  if (w.is_constant()) return std::nullopt;
  auto h = membership_in(f, w);
  if (!h) return std::nullopt;
  sf.h = std::move(*h);
  if (sf.recompose() != f) throw InternalError("detect_special: witness does not recompose");
  return sf;
}

std::optional<SpecialForm> try_additive(const BiPoly& f, const SeparatedRatio& sr) {
  if (!sr.a_den.is_constant() || !sr.b_num.is_constant()) return std::nullopt;
  const Rational kappa(sr.a_num.degree() + 1);
  const UniPoly phi = (sr.a_num * kappa).antiderivative();
  const UniPoly psi = (sr.b_den * (kappa / sr.b_num.leading())).antiderivative();
  return confirm(f, SpecialKind::additive, phi, psi);
}

std::optional<SpecialForm> try_multiplicative(const BiPoly& f, const SeparatedRatio& sr,
                                              const FactorConfig& config) {
  const auto u_terms = log_derivative_terms(sr.a_num, sr.a_den, config);
  if (!u_terms) return std::nullopt;
  const auto v_terms = log_derivative_terms(sr.b_den, sr.b_num, config);
  if (!v_terms) return std::nullopt;

  Rational kappa;
  for (const auto* terms : {&*u_terms, &*v_terms})
    for (const auto& term : *terms) kappa = kappa.is_zero() ? term.t.abs() : rational_gcd(kappa, term.t);
  if (u_terms->front().t.sign() < 0) kappa = -kappa;

  auto build = [&](const std::vector<LogTerm>& terms, int cap) -> std::optional<UniPoly> {
    UniPoly out = UniPoly::constant(1);
    int deg = 0;
    for (const auto& term : terms) {
      const Rational e = term.t / kappa;
      if (e.sign() <= 0 || !e.is_integer()) return std::nullopt;
      deg += static_cast<int>(e.num().get_si()) * term.p.degree();
      if (deg > cap) return std::nullopt;
      out = out * term.p.pow(static_cast<unsigned>(e.num().get_ui()));
    }
    return out;
  };
  auto phi = build(*u_terms, f.degree_u());
  if (!phi) return std::nullopt;
  auto psi = build(*v_terms, f.degree_v());
  if (!psi) return std::nullopt;
  return confirm(f, SpecialKind::multiplicative, *phi, *psi);
}

}  // namespace

SpecialForm detect_special(const BiPoly& f, const FactorConfig& config) {
  if (f.is_zero()) throw InputError("detect_special: zero polynomial");
  if (!f.depends_on(Var::v))
    return {SpecialKind::degenerate_u, f.as_uni(Var::u), UniPoly::x(), UniPoly()};
  if (!f.depends_on(Var::u))
    return {SpecialKind::degenerate_v, f.as_uni(Var::v), UniPoly(), UniPoly::x()};

  const auto sr = separated_ratio(f);
  if (!sr) return {};
  if (auto sf = try_additive(f, *sr)) return *sf;
  if (auto sf = try_multiplicative(f, *sr, config)) return *sf;
  return {};
}

// ---------------------------------------------------------------------------
// Skew form and the associated h.

std::optional<SkewForm> detect_skew_form(const BiPoly& f) {
  const auto c = f.coeff_decomposition(Var::u).coefficients;
  SkewForm out;
  if (c.empty()) {
    out.q = UniPoly::constant(1);
    return out;
  }
  out.r = c[0];
  if (c.size() == 1) {
    out.q = UniPoly::constant(1);
    return out;
  }
  out.q = c.back().monic();
  std::vector<Rational> lambdas;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k].is_zero()) {
      lambdas.emplace_back(0);
      continue;
    }
    if (c[k].degree() != out.q.degree()) return std::nullopt;
    const Rational lambda = c[k].leading();
    if (c[k] != out.q * lambda) return std::nullopt;
    lambdas.push_back(lambda);
  }
  out.p = UniPoly(std::move(lambdas));
  if (out.recompose() != f) throw InternalError("detect_skew_form: recomposition mismatch");
  return out;
}

AssociatedH associated_h(const BiPoly& f) {
  if (!f.depends_on(Var::u) || !f.depends_on(Var::v))
    throw InputError("associated_h: f must depend on both variables");
  const auto c = f.coeff_decomposition(Var::u).coefficients;
  const auto ct = f.coeff_decomposition(Var::v).coefficients;
  const int du = f.degree_u(), dv = f.degree_v(), d = f.total_degree();

  AssociatedH out;
  for (int i = du; i >= 0 && out.k < 0; --i)
    if (!c[i].is_constant()) out.k = i;
  for (int j = dv; j >= 0 && out.ell < 0; --j)
    if (!ct[j].is_constant()) out.ell = j;

  if (out.k <= 0) {
    out.kind = HCase::degenerate;
    out.h = f;
  } else if (out.k < du) {
    out.kind = HCase::additive;
    out.e = c[out.k].degree();
    out.h = BiPoly::lift(ct[out.ell], Var::u) +
            BiPoly::lift(c[out.k], Var::v) * Rational(dv, out.e);
  } else {
    out.kind = HCase::multiplicative;
    out.e = c[du].degree();
    out.e_prime = out.e;
    out.h = BiPoly::lift(ct[dv].pow(static_cast<unsigned>(out.e_prime)), Var::u) *
            BiPoly::lift(c[du].pow(static_cast<unsigned>(dv)), Var::v);
  }
  if (out.h.total_degree() > 2 * d * d) throw InternalError("associated_h: degree bound violated");
  return out;
}

}  // namespace polyexp
