#include "polyexp/unipoly.hpp"

#include <algorithm>

#include "polyexp/errors.hpp"

namespace polyexp {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& a) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<Rational> d(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  return *this * leading().inverse();
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UniPoly UniPoly::affine(const Rational& alpha, const Rational& beta) const {
  return compose(UniPoly({beta, alpha}));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
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

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational t = r[static_cast<std::size_t>(i)] * inv;
    if (t.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool divides(const UniPoly& b, const UniPoly& a, UniPoly* q) {
  if (b.is_zero()) return a.is_zero();
  auto [quot, rem] = divrem(a, b);
  if (!rem.is_zero()) return false;
  if (q) *q = std::move(quot);
  return true;
}

IntegerPrimitive integer_primitive(const UniPoly& a) {
  IntegerPrimitive out{Rational(0), {}};
  if (a.is_zero()) return out;
  mpz_class lcm_den = 1;
  for (const auto& c : a.coeffs()) lcm_den = lcm(lcm_den, c.den());
  std::vector<mpz_class> ints;
  ints.reserve(a.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_class n = c.num() * (lcm_den / c.den());
    g = gcd(g, n);
    ints.push_back(std::move(n));
  }
  if (ints.back() < 0) g = -g;
  for (auto& n : ints) n /= g;
  out.unit = Rational(g, lcm_den);
  out.coeffs = std::move(ints);
  return out;
}

UniPoly from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& n : coeffs) c.emplace_back(n);
  return UniPoly(std::move(c));
}

}  // namespace polyexp
