#pragma once

#include "apolar/matrix.hpp"
#include "apolar/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apolar {

/// Raised when an operation needs a nontrivial form and gets zero.
class ZeroFormError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Homogeneous polynomial of degree l in two variables. coeffs[k] is the
/// coefficient of X0^k X1^(l-k). The same type carries forms in the dual
/// variables xi0, xi1; the variable names only matter when rendering.
///
/// The zero form keeps its nominal degree. Equality is coefficient-wise,
/// no content is removed behind the caller's back.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0) {}
  /// Zero form of the given degree.
  explicit BinaryForm(int degree);
  /// Degree is coeffs.size() - 1.
  explicit BinaryForm(RationalVector coeffs);

  static BinaryForm monomial(int x0_exp, int x1_exp, const Rational& c = 1);
  /// a*X0 + b*X1
  static BinaryForm linear(const Rational& a, const Rational& b);

  int degree() const { return degree_; }
  const RationalVector& coeffs() const { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  bool is_zero() const { return is_zero_vector(coeffs_); }

  BinaryForm& operator+=(const BinaryForm& other);
  BinaryForm& operator-=(const BinaryForm& other);
  BinaryForm& operator*=(const Rational& s);

  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Rational& s) { return a *= s; }
  friend BinaryForm operator*(const Rational& s, BinaryForm a) { return a *= s; }
  friend BinaryForm operator-(BinaryForm a) { return a *= Rational(-1); }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_;
  RationalVector coeffs_;
};

/// Dimension of the space of degree-d forms, 0 for negative d.
inline int forms_dim(int d) { return d < 0 ? 0 : d + 1; }

/// 2x2 matrix (a b; c d) acting by X0 -> a X0 + b X1, X1 -> c X0 + d X1.
struct LinearSubstitution {
  Rational a = 1, b = 0, c = 0, d = 1;

  Rational det() const { return a * d - b * c; }
  static LinearSubstitution identity() { return {}; }
  static LinearSubstitution swap() { return {0, 1, 1, 0}; }
  friend bool operator==(const LinearSubstitution&, const LinearSubstitution&) = default;
};

/// Matrix product g*h, so that (p o g) o h == p o (g*h).
LinearSubstitution operator*(const LinearSubstitution& g, const LinearSubstitution& h);

BinaryForm multiply(const BinaryForm& p, const BinaryForm& q);
BinaryForm power(const BinaryForm& p, int e);

/// q(d/dX0, d/dX1) applied to p. Throws std::invalid_argument if deg q > deg p.
BinaryForm apolar_apply(const BinaryForm& q, const BinaryForm& p);

/// p(a X0 + b X1, c X0 + d X1). Throws std::invalid_argument for singular g.
BinaryForm substitute(const BinaryForm& p, const LinearSubstitution& g);

BinaryForm derivative_x0(const BinaryForm& p);
BinaryForm derivative_x1(const BinaryForm& p);

/// No repeated linear factor over C. Throws ZeroFormError for p == 0.
bool is_squarefree(const BinaryForm& p);

/// p == c * lambda^l for a linear form lambda, tested by vanishing of the
/// Hessian p_00 p_11 - p_01^2. Throws ZeroFormError for p == 0.
bool is_linear_power(const BinaryForm& p);

/// Homogeneous gcd, integer-primitive with positive leading coefficient.
/// Degree 0 iff p and q have no common projective zero.
/// Throws ZeroFormError if both are zero.
BinaryForm gcd_forms(const BinaryForm& p, const BinaryForm& q);

/// Scale to integer coefficients with gcd 1 and make the coefficient of the
/// highest X0-power positive. The zero form is returned unchanged.
BinaryForm normalize(const BinaryForm& p);

/// True iff p == s*q for some nonzero rational s (both nonzero, same degree).
bool proportional(const BinaryForm& p, const BinaryForm& q);

// --- text I/O ---------------------------------------------------------

struct VariableNames {
  std::string x0 = "X0";
  std::string x1 = "X1";
};
inline const VariableNames kDualVariables{"xi0", "xi1"};

/// Canonical expression, terms by decreasing X0-exponent, e.g.
/// "X0^2*X1 - 1/2*X1^3". A zero form of positive degree l renders as
/// "0*X1^l" so that parse(render(p)) == p holds including the degree.
std::string render(const BinaryForm& p, const VariableNames& names = {});

/// Expression syntax over X0, X1 (aliases x0, x1, xi0, xi1): integer and
/// p/q coefficients, + - * / ^ and parentheses. Division only by nonzero
/// constants. The result must be homogeneous.
/// Throws std::invalid_argument on malformed or inhomogeneous input.
BinaryForm parse_expression(std::string_view text);

/// Either an expression or a JSON object {"degree": l, "coeffs": ["a0", ...]}.
BinaryForm parse_form(std::string_view text);

}  // namespace apolar
