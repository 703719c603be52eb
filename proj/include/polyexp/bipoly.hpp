#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyexp/rational.hpp"
#include "polyexp/unipoly.hpp"

namespace polyexp {

enum class Var { u, v };

inline Var other(Var x) { return x == Var::u ? Var::v : Var::u; }

struct Monomial {
  int u = 0;
  int v = 0;
  int total() const { return u + v; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex, larger first: higher total degree, then higher u-exponent.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.u > b.u;
  }
};

/// Names used when printing the two slots of a BiPoly.
using VarNames = std::array<std::string, 2>;
inline const VarNames kUV{"u", "v"};
inline const VarNames kXY{"x", "y"};
inline const VarNames kTS{"t", "s"};

struct CoeffDecomposition;

/// Sparse bivariate polynomial over Q. Terms are kept in graded-lex order,
/// leading term first; zero coefficients are never stored. The degree cache
/// (d_u, d_v, d) is refreshed by every mutating operation. Zero has all
/// three degrees equal to -1.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static BiPoly u();
  static BiPoly v();
  static BiPoly var(Var x) { return x == Var::u ? u() : v(); }
  static BiPoly monomial(const Rational& c, int eu, int ev);
  /// Embeds p(x) as a polynomial in the chosen slot.
  static BiPoly lift(const UniPoly& p, Var x);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool depends_on(Var x) const { return degree(x) > 0; }

  int degree_u() const { return du_; }
  int degree_v() const { return dv_; }
  int degree(Var x) const { return x == Var::u ? du_ : dv_; }
  int total_degree() const { return d_; }

  Rational coeff(int eu, int ev) const;
  Rational constant_term() const { return coeff(0, 0); }
  /// Leading term under graded-lex. Precondition: nonzero.
  std::pair<Monomial, Rational> leading_term() const;

  Rational eval(const Rational& a, const Rational& b) const;
  /// f(a, .) as a polynomial in the v slot.
  UniPoly eval_u(const Rational& a) const;
  /// f(., b) as a polynomial in the u slot.
  UniPoly eval_v(const Rational& b) const;
  /// Univariate view when the polynomial does not depend on `other(x)`.
  UniPoly as_uni(Var x) const;

  BiPoly partial(Var x) const;
  CoeffDecomposition coeff_decomposition(Var x) const;
  BiPoly swap_vars() const;
  /// f(alpha*u + beta, gamma*v + delta).
  BiPoly affine(const Rational& alpha, const Rational& beta, const Rational& gamma,
                const Rational& delta) const;
  BiPoly pow(unsigned e) const;

  /// Integer content 1 and positive leading coefficient. Zero stays zero.
  BiPoly normalized() const;
  /// Leading coefficient made 1.
  BiPoly monic() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: graded-lex descending, explicit '*' and '^'.
  std::string to_string(const VarNames& names = kUV) const;

 private:
  void refresh();
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
  int du_ = -1;
  int dv_ = -1;
  int d_ = -1;
};

/// f = sum_i coefficients[i] * x^i where x is `variable` and each coefficient
/// is a polynomial in the other variable.
struct CoeffDecomposition {
  Var variable = Var::u;
  std::vector<UniPoly> coefficients;

  BiPoly recombine() const;
};

/// outer(inner(u, v)).
BiPoly compose(const UniPoly& outer, const BiPoly& inner);

/// Sum of the monomials of maximal total degree. Throws on zero input.
BiPoly lt_poly(const BiPoly& f);

/// Multivariate division by a single divisor; returns the quotient when the
/// remainder vanishes. Throws InputError on a zero divisor.
std::optional<BiPoly> divide_exact(const BiPoly& f, const BiPoly& g);

}  // namespace polyexp
