#include "polyexp/parse.hpp"

#include <array>
#include <cctype>
#include <map>
#include <string>

#include "polyexp/errors.hpp"

namespace polyexp {

namespace {

// Up to three slots: (u|x|t), (v|y|s), z.
using Exps = std::array<int, 3>;
using Poly3 = std::map<Exps, Rational>;

constexpr unsigned kMaxExponent = 4096;

void add_into(Poly3& acc, const Exps& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Poly3 add(const Poly3& a, const Poly3& b, int sign) {
  Poly3 out = a;
  for (const auto& [e, c] : b) add_into(out, e, sign > 0 ? c : -c);
  return out;
}

Poly3 mul(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_into(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Poly3 power(const Poly3& a, unsigned e) {
  Poly3 result{{{0, 0, 0}, Rational(1)}}, base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e) base = mul(base, base);
  }
  return result;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly3 parse_all() {
    Poly3 p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  // Spelling used for each slot, or '\0' if unused.
  const std::array<char, 3>& names() const { return names_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly3 expr() {
    Poly3 acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = add(acc, term(), +1);
      } else if (peek('-')) {
        ++pos_;
        acc = add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  Poly3 term() {
    Poly3 acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = mul(acc, unary());
    }
    skip_ws();
    if (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
        fail("implicit multiplication is not allowed");
    }
    return acc;
  }

  Poly3 unary() {
    if (peek('-')) {
      ++pos_;
      Poly3 p = unary();
      for (auto& kv : p) kv.second = -kv.second;
      return p;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power_expr();
  }

  Poly3 power_expr() {
    Poly3 base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer literal");
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      return power(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly3 primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly3 p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Poly3 number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) {
        pos_ = start;
        fail("malformed rational literal");
      }
    }
    const std::string_view lit = s_.substr(start, pos_ - start);
    Rational r;
    try {
      r = Rational::parse(lit);
    } catch (const InputError&) {
      pos_ = start;
      fail("malformed rational literal '" + std::string(lit) + "'");
    }
    Poly3 p;
    add_into(p, {0, 0, 0}, r);
    return p;
  }

  Poly3 variable() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    int slot = -1;
    if (name == "u" || name == "x" || name == "t") slot = 0;
    if (name == "v" || name == "y" || name == "s") slot = 1;
    if (name == "z") slot = 2;
    if (slot < 0) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    char& used = names_[static_cast<std::size_t>(slot)];
    if (used != '\0' && used != name[0]) {
      pos_ = start;
      fail("variables '" + std::string(1, used) + "' and '" + std::string(name) +
           "' occupy the same slot; at most two active variables");
    }
    used = name[0];
    Exps e{0, 0, 0};
    e[static_cast<std::size_t>(slot)] = 1;
    Poly3 p;
    add_into(p, e, Rational(1));
    return p;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::array<char, 3> names_{'\0', '\0', '\0'};
};

}  // namespace

BiPoly parse_poly(std::string_view text) {
  Parser parser(text);
  Poly3 p = parser.parse_all();
  if (parser.names()[2] != '\0') throw ParseError("variable 'z' is not allowed here", text.find('z'));
  BiPoly::Terms t;
  for (const auto& [e, c] : p) t.emplace(Monomial{e[0], e[1]}, c);
  return BiPoly(std::move(t));
}

UniPoly parse_uni(std::string_view text) {
  Parser parser(text);
  Poly3 p = parser.parse_all();
  if (parser.names()[1] != '\0' || parser.names()[2] != '\0')
    throw ParseError("expected a univariate polynomial in u, x or t", 0);
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p) {
    if (coeffs.size() <= static_cast<std::size_t>(e[0])) coeffs.resize(static_cast<std::size_t>(e[0]) + 1);
    coeffs[static_cast<std::size_t>(e[0])] = c;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<BiPoly> parse_zpoly(std::string_view text) {
  Parser parser(text);
  Poly3 p = parser.parse_all();
  std::vector<BiPoly::Terms> by_z;
  for (const auto& [e, c] : p) {
    if (by_z.size() <= static_cast<std::size_t>(e[2])) by_z.resize(static_cast<std::size_t>(e[2]) + 1);
    by_z[static_cast<std::size_t>(e[2])].emplace(Monomial{e[0], e[1]}, c);
  }
  std::vector<BiPoly> out;
  out.reserve(by_z.size());
  for (auto& t : by_z) out.emplace_back(std::move(t));
  return out;
}

}  // namespace polyexp
