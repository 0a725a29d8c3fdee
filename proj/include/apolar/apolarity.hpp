#pragma once

#include "apolar/binary_form.hpp"
#include "apolar/matrix.hpp"

#include <optional>
#include <vector>

namespace apolar {

/// Matrix of Q -> Q . P on degree-d operators. Column j holds the
/// coefficients of (xi0^j xi1^(d-j)) . P, so the shape is (l-d+1) x (d+1).
struct Catalecticant {
  int source_degree;
  int target_degree;
  RationalMatrix matrix;
};

/// Throws ZeroFormError for p == 0 and std::out_of_range unless 0 <= d <= deg p.
Catalecticant catalecticant(const BinaryForm& p, int d);

/// Basis of Ann(P)_d as forms in xi0, xi1 in reduced-echelon normal form.
/// Unlike catalecticant(), any d >= 0 is accepted: above deg p every operator
/// annihilates and the monomial basis is returned.
std::vector<BinaryForm> apolar_kernel(const BinaryForm& p, int d);

/// dim Ann(P)_d by rank computation.
int ann_dim(const BinaryForm& p, int d);

/// dim Ann(P)_d predicted from the generator degrees alone.
int ann_dim_closed_form(int l, int d1, int d2, int d);

/// Sylvester data of a nonzero binary form P of degree l. Ann(P) is
/// generated by g1, g2, coprime, with deg g1 + deg g2 = l + 2.
struct ApolarProfile {
  int degree;  // l
  int d1;
  int d2;
  BinaryForm g1;
  BinaryForm g2;
  int waring_rank;
  int cactus_rank;
  /// d1 == d2: Ann(P)_{d1} is a pencil and g1, g2 are its echelon basis.
  bool equal_degrees;
  /// A squarefree element of Ann(P)_{d1} when one exists.
  std::optional<BinaryForm> squarefree_witness;
};

/// Throws ZeroFormError for p == 0.
ApolarProfile sylvester_generators(const BinaryForm& p);

int waring_rank(const BinaryForm& p);
int cactus_rank(const BinaryForm& p);

/// Cactus rank from the Waring rank: rk if rk <= (l+2)/2, else l+2-rk.
int cactus_from_waring(int l, int waring);

/// Upper bound floor((l+2)/2) of the cactus rank, attained generically.
inline int generic_cactus_rank(int l) { return (l + 2) / 2; }

/// Span of m * g over all monomials m of degree d - deg g, as coefficient
/// vectors of length d+1. Empty when d < deg g.
std::vector<RationalVector> multiples_in_degree(const BinaryForm& g, int d);

/// Degree-d piece of the ideal (g1, g2) as a list of spanning vectors.
std::vector<RationalVector> ideal_in_degree(const BinaryForm& g1, const BinaryForm& g2, int d);

}  // namespace apolar
