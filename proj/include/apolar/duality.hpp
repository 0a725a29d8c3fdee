#pragma once

#include "apolar/binary_form.hpp"
#include "apolar/matrix.hpp"

#include <string_view>

namespace apolar {

/// A linear functional on degree-l forms, stored by its values on the
/// monomial basis: values[s] = phi(X0^s X1^(l-s)). A negative degree stands
/// for the dual of the zero space and carries no values.
struct DualVector {
  int degree = 0;
  RationalVector values;

  DualVector() : values(1) {}
  DualVector(int degree, RationalVector values);
  static DualVector zero(int degree);

  /// phi(r) for a form r of the same degree.
  Rational evaluate(const BinaryForm& r) const;

  DualVector& operator+=(const DualVector& other);
  DualVector& operator*=(const Rational& s);
  friend DualVector operator+(DualVector a, const DualVector& b) { return a += b; }
  friend DualVector operator*(const Rational& s, DualVector a) { return a *= s; }
  friend bool operator==(const DualVector&, const DualVector&) = default;
};

/// D_l: the operator P(d/dX0, d/dX1) as a functional. values[s] = s!(l-s)! coeffs[s].
DualVector d_l_forward(const BinaryForm& p);

/// Inverse of d_l_forward: coeffs[s] = values[s] / (s!(l-s)!).
BinaryForm d_l_inverse(const DualVector& phi);

/// Transpose of multiplication by q: (q^t phi)(R) = phi(q R) for every R of
/// degree l - deg q. Throws std::invalid_argument if deg q > deg phi.
DualVector transpose_mult(const BinaryForm& q, const DualVector& phi);

/// Matrix of Q -> transpose_mult(Q, phi) on degree-d monomials Q,
/// shape (l-d+1) x (d+1).
RationalMatrix transpose_mult_matrix(const DualVector& phi, int d);

/// transpose_mult(q, D_l(p)) == D_{l-d}(q . p), with p read in the
/// abstract variables of the operator. Throws std::invalid_argument if deg q > deg p.
bool verify_duality(const BinaryForm& p, const BinaryForm& q);

/// Which branch of the cactus-rank formula for dim C_P^d applies.
enum class CokerBranch {
  Vanishing,        // l + 2 - r <= d <= l: dimension 0
  CactusDependent,  // r <= d < l + 2 - r: dimension l - d + 1 - r
  Generic,          // d < r: dimension l - 2d
};
std::string_view to_string(CokerBranch b);

struct CokerPrediction {
  int dimension;
  CokerBranch branch;
};

/// dim C_P^d from l, d and the cactus rank r only.
CokerPrediction coker_dim_closed_form(int l, int d, int cactus_rank);

/// dim of the cokernel of Q -> Q . P on degree-d operators, by rank.
/// Throws ZeroFormError for p == 0, std::out_of_range unless 0 <= d <= deg p.
int coker_dim(const BinaryForm& p, int d);

}  // namespace apolar
