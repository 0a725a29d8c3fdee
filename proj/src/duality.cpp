#include "apolar/duality.hpp"

#include "apolar/apolarity.hpp"

#include <stdexcept>
#include <string>

namespace apolar {

namespace {

Integer monomial_weight(int s, int l) {
  return factorial(static_cast<unsigned long>(s)) * factorial(static_cast<unsigned long>(l - s));
}

std::size_t dual_length(int degree) { return degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1; }

}  // namespace

DualVector::DualVector(int degree, RationalVector values) : degree(degree), values(std::move(values)) {
  if (this->values.size() != dual_length(degree))
    throw std::invalid_argument("dual vector of degree " + std::to_string(degree) + " needs " +
                                std::to_string(dual_length(degree)) + " values");
}

DualVector DualVector::zero(int degree) { return DualVector(degree, RationalVector(dual_length(degree))); }

Rational DualVector::evaluate(const BinaryForm& r) const {
  if (r.degree() != degree) throw std::invalid_argument("evaluating functional on form of wrong degree");
  Rational out = 0;
  for (int s = 0; s <= degree; ++s) out += values[s] * r[s];
  return out;
}

DualVector& DualVector::operator+=(const DualVector& other) {
  if (other.degree != degree) throw std::invalid_argument("adding dual vectors of different degrees");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

DualVector& DualVector::operator*=(const Rational& s) {
  for (auto& v : values) v *= s;
  return *this;
}

DualVector d_l_forward(const BinaryForm& p) {
  const int l = p.degree();
  RationalVector values(dual_length(l));
  for (int s = 0; s <= l; ++s) values[s] = p[s] * Rational(monomial_weight(s, l));
  return {l, std::move(values)};
}

BinaryForm d_l_inverse(const DualVector& phi) {
  if (phi.degree < 0) throw std::invalid_argument("d_l_inverse: negative degree");
  const int l = phi.degree;
  BinaryForm p(l);
  for (int s = 0; s <= l; ++s) p[s] = phi.values[s] / Rational(monomial_weight(s, l));
  return p;
}

DualVector transpose_mult(const BinaryForm& q, const DualVector& phi) {
  const int d = q.degree();
  if (d > phi.degree) throw std::invalid_argument("transpose_mult: multiplier degree exceeds functional degree");
  const int target = phi.degree - d;
  DualVector out = DualVector::zero(target);
  // (q^t phi)(X0^s X1^(target-s)) = sum_k q_k phi(X0^(k+s) X1^(...)).
  for (int s = 0; s <= target; ++s)
    for (int k = 0; k <= d; ++k)
      if (!is_zero(q[k])) out.values[s] += q[k] * phi.values[k + s];
  return out;
}

RationalMatrix transpose_mult_matrix(const DualVector& phi, int d) {
  if (d < 0 || d > phi.degree) throw std::out_of_range("transpose_mult_matrix: degree out of range");
  RationalMatrix m(static_cast<std::size_t>(phi.degree - d + 1), static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    const DualVector image = transpose_mult(BinaryForm::monomial(j, d - j), phi);
    for (std::size_t r = 0; r < image.values.size(); ++r) m(r, j) = image.values[r];
  }
  return m;
}

bool verify_duality(const BinaryForm& p, const BinaryForm& q) {
  if (q.degree() > p.degree()) throw std::invalid_argument("verify_duality: deg q exceeds deg p");
  return transpose_mult(q, d_l_forward(p)) == d_l_forward(apolar_apply(q, p));
}

std::string_view to_string(CokerBranch b) {
  switch (b) {
    case CokerBranch::Vanishing: return "vanishing";
    case CokerBranch::CactusDependent: return "cactus_dependent";
    case CokerBranch::Generic: return "generic";
  }
  return "unknown";
}

CokerPrediction coker_dim_closed_form(int l, int d, int r) {
  if (l + 2 - r <= d && d <= l) return {0, CokerBranch::Vanishing};
  if (r <= d && d < l + 2 - r) return {l - d + 1 - r, CokerBranch::CactusDependent};
  return {l - 2 * d, CokerBranch::Generic};
}

int coker_dim(const BinaryForm& p, int d) {
  const Catalecticant c = catalecticant(p, d);
  return static_cast<int>(c.matrix.rows() - rank(c.matrix));
}

}  // namespace apolar
