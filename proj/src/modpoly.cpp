#include "modpoly.hpp"

#include <algorithm>

#include "polyexp/errors.hpp"

namespace polyexp::modp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw InternalError("modular inverse does not exist");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Fp add(const Fp& a, const Fp& b, std::uint64_t p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Fp sub(const Fp& a, const Fp& b, std::uint64_t p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Fp mul(const Fp& a, const Fp& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

Fp scale(const Fp& a, std::uint64_t s, std::uint64_t p) {
  Fp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  trim(r);
  return r;
}

std::pair<Fp, Fp> divrem(const Fp& a, const Fp& b, std::uint64_t p) {
  if (b.empty()) throw InternalError("F_p division by zero");
  Fp r = a;
  if (r.size() < b.size()) return {Fp{}, r};
  Fp q(r.size() - b.size() + 1, 0);
  const std::uint64_t li = inv(b.back(), p);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    const std::uint64_t t = mulmod(r[i], li, p);
    if (t != 0) {
      q[i - (b.size() - 1)] = t;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t& x = r[i - (b.size() - 1) + j];
        x = (x + p - mulmod(t, b[j], p)) % p;
      }
    }
    if (i == 0) break;
  }
  trim(q);
  trim(r);
  return {q, r};
}

Fp rem(const Fp& a, const Fp& b, std::uint64_t p) { return divrem(a, b, p).second; }

Fp monic(const Fp& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Fp gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

void xgcd(const Fp& a, const Fp& b, std::uint64_t p, Fp& g, Fp& s, Fp& t) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Fp ns = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    Fp nt = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  const std::uint64_t li = inv(r0.back(), p);
  g = scale(r0, li, p);
  s = scale(s0, li, p);
  t = scale(t0, li, p);
}

Fp derivative(const Fp& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Fp d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

Fp powmod(const Fp& base, const mpz_class& e, const Fp& m, std::uint64_t p) {
  Fp result{1};
  result = rem(result, m, p);
  Fp b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

Fp reduce(const std::vector<mpz_class>& a, std::uint64_t p) {
  Fp r(a.size());
  mpz_class t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), a[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

namespace {

// Splits f (product of distinct irreducibles of degree k) into its factors.
void equal_degree(const Fp& f, std::size_t k, std::uint64_t p, std::mt19937_64& rng, std::vector<Fp>& out) {
  const std::size_t n = f.size() - 1;
  if (n == k) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, k);
  e = (e - 1) / 2;
  for (;;) {
    Fp a(n);
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (a.size() <= 1) continue;
    Fp b = sub(powmod(a, e, f, p), Fp{1}, p);
    Fp g = gcd(f, b, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, k, p, rng, out);
      equal_degree(divrem(f, g, p).first, k, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fp> factor_squarefree(const Fp& f_in, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<Fp> out;
  Fp f = monic(f_in, p);
  const Fp x{0, 1};
  Fp h = x;
  std::size_t i = 0;
  const mpz_class pz(static_cast<unsigned long>(p));
  while (f.size() > 1 && 2 * (i + 1) <= f.size() - 1) {
    ++i;
    h = powmod(h, pz, f, p);
    Fp g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree(g, i, p, rng, out);
      f = divrem(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

}  // namespace polyexp::modp

namespace polyexp::modm {

void trim(Zm& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Zm reduce(const Zm& a, const mpz_class& m) {
  Zm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

Zm symmetric(const Zm& a, const mpz_class& m) {
  Zm r = reduce(a, m);
  const mpz_class half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  trim(r);
  return r;
}

Zm add(const Zm& a, const Zm& b, const mpz_class& m) {
  Zm r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return reduce(r, m);
}

Zm sub(const Zm& a, const Zm& b, const mpz_class& m) {
  Zm r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return reduce(r, m);
}

Zm mul(const Zm& a, const Zm& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  Zm r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return reduce(r, m);
}

std::pair<Zm, Zm> divrem_monic(const Zm& a, const Zm& b, const mpz_class& m) {
  Zm r = reduce(a, m);
  if (r.size() < b.size()) return {Zm{}, r};
  Zm q(r.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    const mpz_class t = r[i];
    if (t == 0) continue;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  return {reduce(q, m), reduce(r, m)};
}

}  // namespace polyexp::modm
