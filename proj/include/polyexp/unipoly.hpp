#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "polyexp/rational.hpp"

namespace polyexp {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// highest stored coefficient is nonzero, and the zero polynomial stores none.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly x();
  static UniPoly monomial(const Rational& c, int power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }

  Rational eval(const Rational& a) const;
  UniPoly derivative() const;
  /// Antiderivative with zero constant term.
  UniPoly antiderivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;
  /// this(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  /// this(alpha * x + beta).
  UniPoly affine(const Rational& alpha, const Rational& beta) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Canonical text, highest power first, e.g. "w^2 - 3/2*w + 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Division with remainder over Q. Throws InputError on a zero divisor.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Returns true and sets q when b divides a exactly.
bool divides(const UniPoly& b, const UniPoly& a, UniPoly* q = nullptr);

/// a = unit * (integer primitive polynomial with positive leading coefficient).
struct IntegerPrimitive {
  Rational unit;
  std::vector<mpz_class> coeffs;
};
IntegerPrimitive integer_primitive(const UniPoly& a);
UniPoly from_integers(const std::vector<mpz_class>& coeffs);

}  // namespace polyexp
