#include "polyexp/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <random>

#include "modpoly.hpp"
#include "polyexp/errors.hpp"
#include "polyexp/gcd.hpp"

namespace polyexp {

namespace {

using ZPoly = std::vector<mpz_class>;

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// Exact quotient a / b over Z, or empty optional when b does not divide a.
std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const mpz_class t = r[i] / b.back();
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

ZPoly zprimitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// One quadratic Hensel step (modulus m to m^2) for f = g*h with h monic and
// s*g + t*h = 1.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m2) {
  using namespace modm;
  const Zm e = sub(f, mul(g, h, m2), m2);
  auto [q, r] = divrem_monic(mul(s, e, m2), h, m2);
  Zm g2 = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
  Zm h2 = add(h, r, m2);
  const Zm b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), Zm{mpz_class(1)}, m2);
  auto [c, d] = divrem_monic(mul(s, b, m2), h2, m2);
  s = sub(s, d, m2);
  t = sub(t, add(mul(t, b, m2), mul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f == lc(f) * prod(factors) mod p to monic factors modulo p^(2^steps).
void multi_lift(const ZPoly& f, const std::vector<modp::Fp>& factors, std::uint64_t p, int steps,
                const mpz_class& modulus, std::vector<ZPoly>& out) {
  auto to_z = [](const modp::Fp& a) {
    ZPoly z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = static_cast<unsigned long>(a[i]);
    return z;
  };
  if (factors.size() == 1) {
    mpz_class inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly z = f;
    for (auto& c : z) c *= inv_lc;
    out.push_back(modm::reduce(z, modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<modp::Fp> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<modp::Fp> right(factors.begin() + static_cast<long>(half), factors.end());
  modp::Fp g0 = modp::reduce(ZPoly{f.back()}, p), h0{1};
  for (const auto& a : left) g0 = modp::mul(g0, a, p);
  for (const auto& a : right) h0 = modp::mul(h0, a, p);
  modp::Fp gg, s0, t0;
  modp::xgcd(g0, h0, p, gg, s0, t0);
  if (gg.size() != 1) throw InternalError("Hensel: factors are not coprime mod p");
  ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  // Leading coefficient of g is lc(f) exactly, not just mod p.
  g.back() = f.back();
  mpz_class m = static_cast<unsigned long>(p);
  for (int i = 0; i < steps; ++i) {
    m *= m;
    hensel_step(f, g, h, s, t, m);
  }
  multi_lift(g, left, p, steps, modulus, out);
  multi_lift(h, right, p, steps, modulus, out);
}

// Factors a primitive, square-free integer polynomial with positive leading
// coefficient, nonzero constant term and degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = zdeg(f);
  std::mt19937_64 rng(0x5eed);
  std::uint64_t best_p = 0;
  std::vector<modp::Fp> best;
  int good = 0;
  for (unsigned long p = 11; good < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const modp::Fp fp = modp::reduce(f, p);
    if (modp::gcd(fp, modp::derivative(fp, p), p).size() != 1) continue;
    auto facs = modp::factor_squarefree(fp, p, rng);
    if (facs.size() == 1) return {f};
    ++good;
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
  }
  if (best.empty()) throw InternalError("no prime of good reduction found");

  mpz_class maxabs = 0;
  for (const auto& c : f) maxabs = std::max(maxabs, mpz_class(abs(c)));
  mpz_class bound = maxabs * abs(f.back()) * (sqrt(mpz_class(n + 1)) + 1) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  int steps = 0;
  mpz_class modulus = static_cast<unsigned long>(best_p);
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  multi_lift(f, best, best_p, steps, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{rest.back()};
      for (std::size_t i : idx) cand = modm::mul(cand, pool[i], modulus);
      cand = modm::symmetric(cand, modulus);
      const bool const_ok = cand.empty() ? false : mpz_divisible_p(mpz_class(rest.front() * rest.back()).get_mpz_t(),
                                                                   cand.front().get_mpz_t());
      if (const_ok && zdeg(cand) < zdeg(rest)) {
        ZPoly g = zprimitive(cand);
        if (auto q = zdiv_exact(rest, g)) {
          result.push_back(g);
          rest = std::move(*q);
          std::vector<ZPoly> next;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
          pool = std::move(next);
          found = true;
          break;
        }
      }
      // Next combination.
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (zdeg(rest) >= 1) result.push_back(zprimitive(rest));
  return result;
}

// Irreducible factors (primitive, positive lc) of a square-free primitive
// integer polynomial of positive degree.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  std::vector<ZPoly> out;
  if (f.front() == 0) {
    out.push_back(ZPoly{mpz_class(0), mpz_class(1)});
    f.erase(f.begin());
  }
  if (zdeg(f) == 1) {
    out.push_back(zprimitive(f));
  } else if (zdeg(f) >= 2) {
    for (auto& g : zassenhaus(f)) out.push_back(std::move(g));
  }
  return out;
}

std::string sort_key(const UniPoly& p) { return p.to_string(); }
std::string sort_key(const BiPoly& p) { return p.to_string(); }

template <class Poly>
void canonical_order(std::vector<std::pair<Poly, int>>& factors) {
  auto deg = [](const Poly& p) {
    if constexpr (std::is_same_v<Poly, UniPoly>) {
      return p.degree();
    } else {
      return p.total_degree();
    }
  };
  std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) < deg(b.first);
    return sort_key(a.first) < sort_key(b.first);
  });
}

UniFactorization uni_factor_unbounded(const UniPoly& p) {
  UniFactorization out;
  if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
  if (p.degree() == 0) {
    out.unit = p.leading();
    return out;
  }
  for (const auto& [part, mult] : square_free_parts(p)) {
    const IntegerPrimitive ip = integer_primitive(part);
    for (const auto& g : factor_squarefree_z(ip.coeffs)) out.factors.emplace_back(from_integers(g), mult);
  }
  Rational lc_prod(1);
  for (const auto& [g, m] : out.factors) lc_prod *= g.leading().pow(static_cast<unsigned>(m));
  out.unit = p.leading() / lc_prod;
  canonical_order(out.factors);
  if (out.expand() != p) throw InternalError("univariate factorization does not recompose");
  return out;
}

// Kronecker map u^i v^j -> x^(i + D*j).
UniPoly kronecker(const BiPoly& f, int D) {
  std::vector<Rational> c(static_cast<std::size_t>(f.degree_u() + D * f.degree_v()) + 1);
  for (const auto& [m, coef] : f.terms()) c[static_cast<std::size_t>(m.u + D * m.v)] = coef;
  return UniPoly(std::move(c));
}

BiPoly inverse_kronecker(const UniPoly& p, int D) {
  BiPoly::Terms t;
  for (int e = 0; e <= p.degree(); ++e) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(e)];
    if (!c.is_zero()) t.emplace(Monomial{e % D, e / D}, c);
  }
  return BiPoly(std::move(t));
}

// Irreducible factors of a square-free polynomial that is primitive in v.
std::vector<BiPoly> kronecker_factor(const BiPoly& s) {
  if (s.total_degree() <= 1) return {s.normalized()};
  const int D = s.degree_u() + 1;
  const UniFactorization img = uni_factor_unbounded(kronecker(s, D));
  std::vector<UniPoly> pool;
  for (const auto& [g, m] : img.factors)
    for (int i = 0; i < m; ++i) pool.push_back(g);
  if (pool.size() == 1) return {s.normalized()};

  std::vector<BiPoly> result;
  BiPoly rest = s;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      UniPoly prod = UniPoly::constant(1);
      for (std::size_t i : idx) prod = prod * pool[i];
      const BiPoly cand = inverse_kronecker(prod, D);
      if (!cand.is_constant() && cand.degree_u() <= rest.degree_u() && cand.degree_v() <= rest.degree_v()) {
        if (auto q = divide_exact(rest, cand)) {
          result.push_back(cand.normalized());
          rest = std::move(*q);
          std::vector<UniPoly> next;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
          pool = std::move(next);
          found = true;
          break;
        }
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (!rest.is_constant()) result.push_back(rest.normalized());
  return result;
}

// Yun's square-free decomposition in Q[u][v] for f primitive in v.
std::vector<std::pair<BiPoly, int>> square_free_parts_v(const BiPoly& a) {
  std::vector<std::pair<BiPoly, int>> out;
  auto div = [](const BiPoly& x, const BiPoly& y) {
    auto q = divide_exact(x, y);
    if (!q) throw InternalError("square-free decomposition: inexact division");
    return *q;
  };
  const BiPoly b = a.partial(Var::v);
  const BiPoly c = bi_gcd(a, b);
  BiPoly w = div(a, c);
  BiPoly y = div(b, c);
  BiPoly z = y - w.partial(Var::v);
  for (int i = 1; w.degree_v() > 0; ++i) {
    const BiPoly g = z.is_zero() ? w.normalized() : bi_gcd(w, z);
    if (g.degree_v() > 0) out.emplace_back(g, i);
    w = div(w, g);
    y = div(z, g);
    z = y - w.partial(Var::v);
  }
  return out;
}

}  // namespace

std::vector<std::pair<UniPoly, int>> square_free_parts(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() < 1) return out;
  const UniPoly a = p.monic();
  const UniPoly b = a.derivative();
  const UniPoly c = gcd(a, b);
  UniPoly w = divrem(a, c).first;
  UniPoly y = divrem(b, c).first;
  UniPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    const UniPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divrem(w, g).first;
    y = divrem(z, g).first;
    z = y - w.derivative();
  }
  return out;
}

UniFactorization uni_factor(const UniPoly& p, const FactorConfig& config) {
  if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
  if (p.degree() > config.uni_degree_cap)
    throw DegreeCapError("univariate degree " + std::to_string(p.degree()) + " exceeds cap " +
                         std::to_string(config.uni_degree_cap));
  return uni_factor_unbounded(p);
}

BiFactorization bi_factor(const BiPoly& f, const FactorConfig& config) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  if (f.total_degree() > config.bi_degree_cap)
    throw DegreeCapError("total degree " + std::to_string(f.total_degree()) + " exceeds cap " +
                         std::to_string(config.bi_degree_cap));
  BiFactorization out;
  if (f.is_constant()) {
    out.unit = f.constant_term();
    return out;
  }
  const UniPoly cont = content(f, Var::v);
  BiPoly pp = f;
  if (cont.degree() > 0) {
    pp = *divide_exact(f, BiPoly::lift(cont, Var::u));
    for (const auto& [g, m] : uni_factor_unbounded(cont).factors) out.factors.emplace_back(BiPoly::lift(g, Var::u), m);
  }
  if (pp.degree_v() > 0) {
    for (const auto& [part, mult] : square_free_parts_v(pp))
      for (auto& g : kronecker_factor(part)) out.factors.emplace_back(std::move(g), mult);
  }
  Rational lc_prod(1);
  for (const auto& [g, m] : out.factors) lc_prod *= g.leading_term().second.pow(static_cast<unsigned>(m));
  out.unit = f.leading_term().second / lc_prod;
  canonical_order(out.factors);
  if (out.expand() != f) throw InternalError("bivariate factorization does not recompose");
  return out;
}

bool is_irreducible(const UniPoly& p, const FactorConfig& config) {
  if (p.degree() < 1) throw InputError("irreducibility of a constant is undefined");
  if (p.degree() == 1) return true;
  const auto fac = uni_factor(p, config);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

bool is_irreducible(const BiPoly& f, const FactorConfig& config) {
  if (f.total_degree() < 1) throw InputError("irreducibility of a constant is undefined");
  if (f.total_degree() == 1) return true;
  const auto fac = bi_factor(f, config);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

}  // namespace polyexp
