#include "apolar/binary_form.hpp"

#include <algorithm>
#include <utility>

namespace apolar {

namespace {

void check_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("binary form degree must be non-negative");
}

// s!/(s-a)!
Integer falling_factorial(int s, int a) {
  Integer out = 1;
  for (int i = 0; i < a; ++i) out *= s - i;
  return out;
}

// Univariate polynomials over Q, coefficient i multiplies x^i, no trailing zeros.
using Univariate = RationalVector;

void trim(Univariate& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

Univariate remainder(Univariate f, const Univariate& g) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const Rational factor = f.back() / g.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] -= factor * g[i];
    f.pop_back();
    trim(f);
  }
  return f;
}

Univariate univariate_gcd(Univariate f, Univariate g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Univariate r = remainder(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

Univariate derivative(const Univariate& f) {
  Univariate out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

// Largest e with X1^e | p; p must be nonzero.
int x1_valuation(const BinaryForm& p) {
  int e = 0;
  for (int k = p.degree(); k >= 0 && is_zero(p[k]); --k) ++e;
  return e;
}

Univariate dehomogenize(const BinaryForm& p) {
  Univariate f(p.coeffs().begin(), p.coeffs().end());
  trim(f);
  return f;
}

}  // namespace

BinaryForm::BinaryForm(int degree) : degree_(degree) {
  check_degree(degree);
  coeffs_.resize(static_cast<std::size_t>(degree) + 1);
}

BinaryForm::BinaryForm(RationalVector coeffs)
    : degree_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::monomial(int x0_exp, int x1_exp, const Rational& c) {
  check_degree(x0_exp);
  check_degree(x1_exp);
  BinaryForm p(x0_exp + x1_exp);
  p[x0_exp] = c;
  return p;
}

BinaryForm BinaryForm::linear(const Rational& a, const Rational& b) {
  return BinaryForm(RationalVector{b, a});
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("adding forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LinearSubstitution operator*(const LinearSubstitution& g, const LinearSubstitution& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
          g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

BinaryForm multiply(const BinaryForm& p, const BinaryForm& q) {
  BinaryForm out(p.degree() + q.degree());
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p[i])) continue;
    for (int j = 0; j <= q.degree(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

BinaryForm power(const BinaryForm& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BinaryForm out = BinaryForm::monomial(0, 0);
  for (int i = 0; i < e; ++i) out = multiply(out, p);
  return out;
}

BinaryForm apolar_apply(const BinaryForm& q, const BinaryForm& p) {
  const int d = q.degree();
  const int l = p.degree();
  if (d > l) throw std::invalid_argument("apolar_apply: operator degree exceeds form degree");
  BinaryForm out(l - d);
  for (int a = 0; a <= d; ++a) {
    if (is_zero(q[a])) continue;
    const int b = d - a;
    for (int s = a; s <= l; ++s) {
      const int t = l - s;
      if (t < b || is_zero(p[s])) continue;
      out[s - a] += q[a] * p[s] * Rational(falling_factorial(s, a) * falling_factorial(t, b));
    }
  }
  return out;
}

BinaryForm substitute(const BinaryForm& p, const LinearSubstitution& g) {
  if (is_zero(g.det())) throw std::invalid_argument("substitute: singular linear substitution");
  const int l = p.degree();
  const BinaryForm u = BinaryForm::linear(g.a, g.b);
  const BinaryForm v = BinaryForm::linear(g.c, g.d);
  std::vector<BinaryForm> u_pow{BinaryForm::monomial(0, 0)}, v_pow{BinaryForm::monomial(0, 0)};
  for (int i = 1; i <= l; ++i) {
    u_pow.push_back(multiply(u_pow.back(), u));
    v_pow.push_back(multiply(v_pow.back(), v));
  }
  BinaryForm out(l);
  for (int k = 0; k <= l; ++k) {
    if (is_zero(p[k])) continue;
    out += multiply(u_pow[k], v_pow[l - k]) * p[k];
  }
  return out;
}

BinaryForm derivative_x0(const BinaryForm& p) {
  if (p.degree() == 0) return BinaryForm(0);
  BinaryForm out(p.degree() - 1);
  for (int k = 1; k <= p.degree(); ++k) out[k - 1] = p[k] * k;
  return out;
}

BinaryForm derivative_x1(const BinaryForm& p) {
  if (p.degree() == 0) return BinaryForm(0);
  const int l = p.degree();
  BinaryForm out(l - 1);
  for (int k = 0; k < l; ++k) out[k] = p[k] * (l - k);
  return out;
}

bool is_squarefree(const BinaryForm& p) {
  if (p.is_zero()) throw ZeroFormError("is_squarefree: zero form");
  if (x1_valuation(p) > 1) return false;
  const Univariate f = dehomogenize(p);
  return univariate_gcd(f, derivative(f)).size() <= 1;
}

bool is_linear_power(const BinaryForm& p) {
  if (p.is_zero()) throw ZeroFormError("is_linear_power: zero form");
  if (p.degree() < 2) return true;
  const BinaryForm p0 = derivative_x0(p);
  const BinaryForm p1 = derivative_x1(p);
  const BinaryForm hessian =
      multiply(derivative_x0(p0), derivative_x1(p1)) - multiply(derivative_x1(p0), derivative_x1(p0));
  return hessian.is_zero();
}

BinaryForm normalize(const BinaryForm& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs())
    if (!is_zero(c)) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    if (is_zero(c)) continue;
    const Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  int lead = p.degree();
  while (is_zero(p[lead])) --lead;
  if (sgn(p[lead]) < 0) scale = -scale;
  return p * scale;
}

bool proportional(const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() != q.degree() || p.is_zero() || q.is_zero()) return false;
  int k = 0;
  while (is_zero(p[k])) ++k;
  const Rational s = q[k] / p[k];
  return p * s == q;
}

BinaryForm gcd_forms(const BinaryForm& p, const BinaryForm& q) {
  if (p.is_zero() && q.is_zero()) throw ZeroFormError("gcd_forms: both forms are zero");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  const int e = std::min(x1_valuation(p), x1_valuation(q));
  const Univariate g = univariate_gcd(dehomogenize(p), dehomogenize(q));
  RationalVector coeffs(g.begin(), g.end());
  coeffs.resize(g.size() + static_cast<std::size_t>(e));
  return normalize(BinaryForm(std::move(coeffs)));
}

}  // namespace apolar
