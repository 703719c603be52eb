#include "polyexp/gcd.hpp"

#include "polyexp/errors.hpp"

namespace polyexp {

namespace {

void trim(Recursive& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

int rdeg(const Recursive& r) { return static_cast<int>(r.size()) - 1; }

UniPoly rcontent(const Recursive& r) {
  UniPoly g;
  for (const auto& c : r) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Recursive rdiv(const Recursive& r, const UniPoly& c) {
  Recursive out;
  out.reserve(r.size());
  for (const auto& x : r) {
    UniPoly q;
    if (!divides(c, x, &q)) throw InternalError("content does not divide coefficient");
    out.push_back(std::move(q));
  }
  return out;
}

Recursive primitive(const Recursive& r) {
  if (r.empty()) return r;
  Recursive p = rdiv(r, rcontent(r));
  // Scale so the leading coefficient is monic in the inner variable.
  const Rational s = p.back().leading().inverse();
  for (auto& c : p) c *= s;
  return p;
}

// lc(b)^k * a mod b for suitable k.
Recursive prem(Recursive a, const Recursive& b) {
  const UniPoly& lb = b.back();
  while (!a.empty() && rdeg(a) >= rdeg(b)) {
    const UniPoly la = a.back();
    const int shift = rdeg(a) - rdeg(b);
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= rdeg(b); ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

}  // namespace

Recursive to_recursive(const BiPoly& f, Var main) {
  if (f.is_zero()) return {};
  return f.coeff_decomposition(main).coefficients;
}

BiPoly from_recursive(const Recursive& r, Var main) {
  CoeffDecomposition cd{main, r};
  return cd.recombine();
}

UniPoly content(const BiPoly& f, Var main) { return rcontent(to_recursive(f, main)); }

BiPoly bi_gcd(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd(0, 0) is undefined");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();

  const Var main = (f.depends_on(Var::v) || g.depends_on(Var::v)) ? Var::v : Var::u;
  Recursive a = to_recursive(f, main), b = to_recursive(g, main);
  const UniPoly ca = rcontent(a), cb = rcontent(b);
  const UniPoly c = gcd(ca, cb);
  a = primitive(a);
  b = primitive(b);
  if (rdeg(a) < rdeg(b)) std::swap(a, b);
  while (!b.empty() && rdeg(b) > 0) {
    Recursive r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  Recursive core = b.empty() ? a : Recursive{UniPoly::constant(1)};
  if (rdeg(core) == 0) core = Recursive{UniPoly::constant(1)};
  const BiPoly inner_c = BiPoly::lift(c, other(main));
  return (from_recursive(core, main) * inner_c).normalized();
}

}  // namespace polyexp
