#include "polyexp/bipoly.hpp"

#include <algorithm>

#include "polyexp/errors.hpp"

namespace polyexp {

BiPoly::BiPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  refresh();
}

BiPoly::BiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
  refresh();
}

BiPoly BiPoly::u() { return monomial(1, 1, 0); }
BiPoly BiPoly::v() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, int eu, int ev) {
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{eu, ev}, c);
  p.refresh();
  return p;
}

BiPoly BiPoly::lift(const UniPoly& p, Var x) {
  Terms t;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    t.emplace(x == Var::u ? Monomial{i, 0} : Monomial{0, i}, c);
  }
  return BiPoly(std::move(t));
}

void BiPoly::refresh() {
  du_ = dv_ = d_ = -1;
  for (const auto& [m, c] : terms_) {
    du_ = std::max(du_, m.u);
    dv_ = std::max(dv_, m.v);
    d_ = std::max(d_, m.total());
  }
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiPoly::is_constant() const { return d_ <= 0; }

Rational BiPoly::coeff(int eu, int ev) const {
  auto it = terms_.find(Monomial{eu, ev});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> BiPoly::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of zero polynomial");
  return *terms_.begin();
}

Rational BiPoly::eval(const Rational& a, const Rational& b) const {
  // Horner in u over the u-view coefficients c_i(b).
  if (terms_.empty()) return Rational(0);
  std::vector<Rational> cu(static_cast<std::size_t>(du_) + 1);
  std::vector<Rational> bpow(static_cast<std::size_t>(dv_) + 1);
  bpow[0] = 1;
  for (std::size_t j = 1; j < bpow.size(); ++j) bpow[j] = bpow[j - 1] * b;
  for (const auto& [m, c] : terms_) cu[static_cast<std::size_t>(m.u)] += c * bpow[static_cast<std::size_t>(m.v)];
  Rational acc;
  for (auto it = cu.rbegin(); it != cu.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

UniPoly BiPoly::eval_u(const Rational& a) const {
  if (terms_.empty()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(dv_) + 1);
  std::vector<Rational> apow(static_cast<std::size_t>(du_) + 1);
  apow[0] = 1;
  for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * a;
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.v)] += c * apow[static_cast<std::size_t>(m.u)];
  return UniPoly(std::move(out));
}

UniPoly BiPoly::eval_v(const Rational& b) const { return swap_vars().eval_u(b); }

UniPoly BiPoly::as_uni(Var x) const {
  if (depends_on(other(x))) throw InputError("polynomial is not univariate in the requested variable");
  return x == Var::u ? eval_v(0) : eval_u(0);
}

BiPoly BiPoly::partial(Var x) const {
  Terms t;
  for (const auto& [m, c] : terms_) {
    const int e = x == Var::u ? m.u : m.v;
    if (e == 0) continue;
    Monomial dm = m;
    (x == Var::u ? dm.u : dm.v) -= 1;
    t.emplace(dm, c * Rational(e));
  }
  return BiPoly(std::move(t));
}

CoeffDecomposition BiPoly::coeff_decomposition(Var x) const {
  CoeffDecomposition out;
  out.variable = x;
  const int dx = std::max(degree(x), 0);
  const int dy = std::max(degree(other(x)), 0);
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dx) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(dy) + 1));
  for (const auto& [m, c] : terms_) {
    const int ex = x == Var::u ? m.u : m.v;
    const int ey = x == Var::u ? m.v : m.u;
    raw[static_cast<std::size_t>(ex)][static_cast<std::size_t>(ey)] = c;
  }
  out.coefficients.reserve(raw.size());
  for (auto& r : raw) out.coefficients.emplace_back(std::move(r));
  return out;
}

BiPoly BiPoly::swap_vars() const {
  Terms t;
  for (const auto& [m, c] : terms_) t.emplace(Monomial{m.v, m.u}, c);
  return BiPoly(std::move(t));
}

BiPoly BiPoly::affine(const Rational& alpha, const Rational& beta, const Rational& gamma,
                      const Rational& delta) const {
  const BiPoly su = BiPoly::u() * alpha + BiPoly(beta);
  const BiPoly sv = BiPoly::v() * gamma + BiPoly(delta);
  std::vector<BiPoly> pu{BiPoly(1)}, pv{BiPoly(1)};
  for (int i = 1; i <= du_; ++i) pu.push_back(pu.back() * su);
  for (int j = 1; j <= dv_; ++j) pv.push_back(pv.back() * sv);
  BiPoly out;
  for (const auto& [m, c] : terms_)
    out += pu[static_cast<std::size_t>(m.u)] * pv[static_cast<std::size_t>(m.v)] * c;
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

BiPoly BiPoly::normalized() const {
  if (terms_.empty()) return {};
  mpz_class lcm_den = 1;
  for (const auto& [m, c] : terms_) lcm_den = lcm(lcm_den, c.den());
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) g = gcd(g, c.num() * (lcm_den / c.den()));
  if (terms_.begin()->second.sign() < 0) g = -g;
  return *this * Rational(lcm_den, g);
}

BiPoly BiPoly::monic() const {
  if (terms_.empty()) return {};
  return *this * terms_.begin()->second.inverse();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  refresh();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  refresh();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= s;
  }
  refresh();
  return *this;
}

BiPoly operator-(const BiPoly& a) { return a * Rational(-1); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial{ma.u + mb.u, ma.v + mb.v}, ca * cb);
  out.refresh();
  return out;
}

std::string BiPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool first = out.empty();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    auto append = [&mono](const std::string& name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append(names[0], m.u);
    append(names[1], m.v);
    const Rational mag = c.abs();
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

BiPoly CoeffDecomposition::recombine() const {
  BiPoly out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    BiPoly c = BiPoly::lift(coefficients[i], other(variable));
    out += c * BiPoly::monomial(1, variable == Var::u ? static_cast<int>(i) : 0,
                                variable == Var::v ? static_cast<int>(i) : 0);
  }
  return out;
}

BiPoly compose(const UniPoly& outer, const BiPoly& inner) {
  BiPoly acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + BiPoly(*it);
  return acc;
}

BiPoly lt_poly(const BiPoly& f) {
  if (f.is_zero()) throw InputError("LT-polynomial of the zero polynomial");
  BiPoly::Terms t;
  for (const auto& [m, c] : f.terms())
    if (m.total() == f.total_degree()) t.emplace(m, c);
  return BiPoly(std::move(t));
}

std::optional<BiPoly> divide_exact(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  if (f.is_zero()) return BiPoly();
  if (f.degree_u() < g.degree_u() || f.degree_v() < g.degree_v()) return std::nullopt;
  const auto [gm, gc] = g.leading_term();
  const Rational ginv = gc.inverse();
  BiPoly r = f;
  BiPoly::Terms q;
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading_term();
    if (rm.u < gm.u || rm.v < gm.v) return std::nullopt;
    const Monomial qm{rm.u - gm.u, rm.v - gm.v};
    const Rational qc = rc * ginv;
    q.emplace(qm, qc);
    r -= g * BiPoly::monomial(qc, qm.u, qm.v);
  }
  return BiPoly(std::move(q));
}

}  // namespace polyexp
