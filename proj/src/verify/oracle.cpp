#include <numeric>
#include <optional>
#include <set>

#include "polyexp/errors.hpp"
#include "polyexp/verify.hpp"

namespace polyexp::verify {

namespace {

// Monic phi of degree a matching the top `steps` non-leading coefficients of
// phi^m against the monic polynomial p.
UniPoly truncated_root(const UniPoly& p, int m, int a, int steps) {
  UniPoly phi = UniPoly::monomial(1, a);
  for (int j = 1; j <= steps; ++j) {
    const Rational c = (p - phi.pow(static_cast<unsigned>(m))).coeff(m * a - j);
    phi += UniPoly::monomial(c / Rational(m), a - j);
  }
  return phi;
}

std::optional<mpz_class> exact_root(const mpz_class& x, int m) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
  return r;
}

// Rational m-th roots of x (both signs when m is even).
std::vector<Rational> rational_roots(const Rational& x, int m) {
  if (x.sign() < 0 && m % 2 == 0) return {};
  const auto n = exact_root(abs(x.num()), m), d = exact_root(x.den(), m);
  if (!n || !d) return {};
  Rational r(*n, *d);
  if (x.sign() < 0) r = -r;
  if (m % 2 == 0) return {r, -r};
  return {r};
}

// Solves rows * x = rhs over Q; none when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs, std::size_t unknowns) {
  std::vector<int> pivot_of(unknowns, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    const Rational inv = rows[r][col].inverse();
    for (std::size_t k = col; k < unknowns; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational factor = rows[i][col];
      for (std::size_t k = col; k < unknowns; ++k) rows[i][k] -= factor * rows[r][k];
      rhs[i] -= factor * rhs[r];
    }
    pivot_of[col] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t col = 0; col < unknowns; ++col)
    if (pivot_of[col] >= 0) x[col] = rhs[static_cast<std::size_t>(pivot_of[col])];
  return x;
}

// h of degree m with f = h(w), by matching every coefficient.
std::optional<UniPoly> solve_outer(const BiPoly& f, const BiPoly& w, int m) {
  std::vector<BiPoly> powers{BiPoly(1)};
  for (int i = 1; i <= m; ++i) powers.push_back(powers.back() * w);
  std::set<std::pair<int, int>> monomials;
  for (const auto& [mono, c] : f.terms()) monomials.insert({mono.u, mono.v});
  for (const BiPoly& p : powers)
    for (const auto& [mono, c] : p.terms()) monomials.insert({mono.u, mono.v});
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& [eu, ev] : monomials) {
    std::vector<Rational> row;
    for (const BiPoly& p : powers) row.push_back(p.coeff(eu, ev));
    rows.push_back(std::move(row));
    rhs.push_back(f.coeff(eu, ev));
  }
  auto x = solve_linear(std::move(rows), std::move(rhs), powers.size());
  if (!x) return std::nullopt;
  UniPoly h(std::move(*x));
  if (compose(h, w) != f) return std::nullopt;
  return h;
}

std::vector<int> common_divisors(int a, int b) {
  std::vector<int> out;
  const int g = std::gcd(a, b);
  for (int m = 1; m <= g; ++m)
    if (g % m == 0) out.push_back(m);
  return out;
}

std::optional<OracleResult> try_additive(const BiPoly& f, int m) {
  const int a = f.degree_u() / m, b = f.degree_v() / m;
  const UniPoly big_f = f.eval_v(0), big_g = f.eval_u(0);
  if (big_f.degree() != m * a || big_g.degree() != m * b) return std::nullopt;
  const Rational eta = big_f.leading();
  const UniPoly phi = truncated_root(big_f * eta.inverse(), m, a, a - 1);
  const UniPoly psi_hat = truncated_root(big_g * big_g.leading().inverse(), m, b, b - 1);
  for (const Rational& beta : rational_roots(big_g.leading() / eta, m)) {
    const UniPoly psi = psi_hat * beta;
    const BiPoly w = BiPoly::lift(phi, Var::u) + BiPoly::lift(psi, Var::v);
    if (auto h = solve_outer(f, w, m)) return OracleResult{true, SpecialKind::additive, *h, phi, psi};
  }
  return std::nullopt;
}

std::optional<OracleResult> try_multiplicative(const BiPoly& f, int m) {
  const int a = f.degree_u() / m, b = f.degree_v() / m;
  const UniPoly top_v = f.coeff_decomposition(Var::v).coefficients.back();
  const UniPoly top_u = f.coeff_decomposition(Var::u).coefficients.back();
  if (top_v.degree() != m * a || top_u.degree() != m * b) return std::nullopt;
  const UniPoly pv = top_v * top_v.leading().inverse(), pu = top_u * top_u.leading().inverse();
  const UniPoly phi = truncated_root(pv, m, a, a), psi = truncated_root(pu, m, b, b);
  if (phi.pow(static_cast<unsigned>(m)) != pv || psi.pow(static_cast<unsigned>(m)) != pu) return std::nullopt;
  const BiPoly w = BiPoly::lift(phi, Var::u) * BiPoly::lift(psi, Var::v);
  if (auto h = solve_outer(f, w, m)) return OracleResult{true, SpecialKind::multiplicative, *h, phi, psi};
  return std::nullopt;
}

}  // namespace

OracleResult oracle_special(const BiPoly& f, int max_degree) {
  if (f.is_zero()) throw InputError("oracle_special: zero polynomial");
  OracleResult out;
  if (f.total_degree() > max_degree) return out;
  out.applicable = true;
  if (!f.depends_on(Var::v)) {
    out.kind = SpecialKind::degenerate_u;
    return out;
  }
  if (!f.depends_on(Var::u)) {
    out.kind = SpecialKind::degenerate_v;
    return out;
  }
  for (int m : common_divisors(f.degree_u(), f.degree_v()))
    if (auto r = try_additive(f, m)) return *r;
  for (int m : common_divisors(f.degree_u(), f.degree_v()))
    if (auto r = try_multiplicative(f, m)) return *r;
  return out;
}

BiPoly random_special(Rng& rng, bool multiplicative, int max_total) {
  auto poly = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rng.rational(6, 3));
    while (c.back().is_zero()) c.back() = rng.rational(6, 3);
    return UniPoly(std::move(c));
  };
  for (;;) {
    const int dh = static_cast<int>(rng.uniform(1, 3)), da = static_cast<int>(rng.uniform(1, 3)),
              db = static_cast<int>(rng.uniform(1, 3));
    const int total = multiplicative ? dh * (da + db) : dh * std::max(da, db);
    if (total > max_total) continue;
    const UniPoly h = poly(dh), phi = poly(da), psi = poly(db);
    const BiPoly a = BiPoly::lift(phi, Var::u), b = BiPoly::lift(psi, Var::v);
    return compose(h, multiplicative ? a * b : a + b);
  }
}

}  // namespace polyexp::verify
