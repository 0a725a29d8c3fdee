#pragma once

#include "apolar/binary_form.hpp"
#include "apolar/duality.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace apolar {

// --- splitting types and descriptors -------------------------------------

/// One summand O(n)^s of a split bundle on the projective line.
struct SplittingSummand {
  int n;
  int s;
  friend bool operator==(const SplittingSummand&, const SplittingSummand&) = default;
};

/// Summands ordered by strictly decreasing n, each multiplicity >= 1.
using SplittingType = std::vector<SplittingSummand>;

/// Throws std::invalid_argument unless the n are strictly decreasing and every s >= 1.
void validate_splitting(const SplittingType& type);

/// "n1:s1,n2:s2,..." -> SplittingType, validated.
SplittingType parse_splitting(std::string_view text);

struct ModuliDescriptor {
  SplittingType splitting;
  std::vector<int> l;                              // l_i = -2 - n_i
  int h1_dim;                                      // sum s_i * max(l_i + 1, 0)
  std::vector<std::vector<int>> aut_block_degrees; // n_i - n_j; only i <= j is meaningful
  int aut_dim;                                     // sum_{i<=j} s_i s_j max(n_i - n_j + 1, 0)
};

ModuliDescriptor describe(const SplittingType& splitting);

// --- automorphisms and their action on H^1 -------------------------------

/// Element of End(E) for E = sum O(n_i)^{s_i}: an upper block-triangular
/// matrix whose (i, j) block is an s_i x s_j matrix of forms of degree
/// n_i - n_j. Blocks below the diagonal are absent.
class BlockAutomorphism {
 public:
  /// All blocks zero (not invertible).
  explicit BlockAutomorphism(SplittingType type);
  static BlockAutomorphism identity(SplittingType type);

  const SplittingType& type() const { return type_; }
  std::size_t blocks() const { return type_.size(); }

  /// Entry (a, b) of block (i, j), i <= j.
  const BinaryForm& entry(std::size_t i, std::size_t j, int a, int b) const;
  BinaryForm& entry(std::size_t i, std::size_t j, int a, int b);

  /// Every diagonal block has nonzero determinant.
  bool is_invertible() const;

  friend bool operator==(const BlockAutomorphism&, const BlockAutomorphism&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j, int a, int b) const;

  SplittingType type_;
  std::vector<std::vector<std::vector<BinaryForm>>> blocks_;  // [i][j - i][a * s_j + b]
};

/// Product a*b; the action satisfies (a*b).phi == a.(b.phi).
BlockAutomorphism compose(const BlockAutomorphism& a, const BlockAutomorphism& b);

/// Phi = (Phi_i), Phi_i a list of s_i functionals on forms of degree l_i.
struct H1Element {
  std::vector<std::vector<DualVector>> components;
  friend bool operator==(const H1Element&, const H1Element&) = default;
};

H1Element zero_h1(const SplittingType& type);

/// (A . Phi)_i = sum_j transpose_mult(A_ij, Phi_j), block-matrix style.
/// Throws std::invalid_argument on shape/degree mismatch or a singular diagonal block.
H1Element act(const BlockAutomorphism& a, const H1Element& phi);

/// Rank-2 case O(n1) + O(n2): the matrix (u1 Q; 0 u2) with Q of degree n1 - n2.
struct Rank2Automorphism {
  Rational u1 = 1;
  Rational u2 = 1;
  BinaryForm q;
};

Rank2Automorphism compose(const Rank2Automorphism& a, const Rank2Automorphism& b);

/// (u1 phi1 + q^t phi2, u2 phi2). Throws std::invalid_argument when u1 or u2
/// vanishes or deg q != deg phi2 - deg phi1.
std::pair<DualVector, DualVector> act_rank2(const Rank2Automorphism& a, const DualVector& phi1,
                                            const DualVector& phi2);

// --- fibres and strata ---------------------------------------------------

/// Dimension of the fibre of the framed non-degenerate moduli space of
/// O(n1) + O(n2) over [D_l(p)], l = -2 - n2, d = n1 - n2.
/// Requires n1 > n2, n1 <= -2, p != 0 and deg p == l.
int fiber_dim(int n1, int n2, const BinaryForm& p);

/// Same dimension computed directly as dim coker(Q -> q^t phi) on degree-d Q.
int fiber_dim_of_functional(int n1, int n2, const DualVector& phi);

struct FiberReport {
  int l;
  int d;
  int cactus_rank;
  int fiber_dim;
  CokerBranch branch;
};

FiberReport fiber_report(int n1, int n2, const BinaryForm& p);

struct StratumMembership {
  int l;
  int d;
  int cactus_rank;  // r, P lies in P^l_r
  int fiber_dim;    // s, P lies in P^l_{d,s}
};

/// Computes (r, s) and throws std::logic_error if they contradict the
/// level-set description of P^l_{d,s}.
StratumMembership stratum_membership(const BinaryForm& p, int d);

/// The three implications tying s = dim C^d_P to r = crank(P).
bool satisfies_level_set_formula(int l, int d, int r, int s);

/// Cactus strata r with P^l_r contained in P^l_{d,s}, by the three-case formula.
std::vector<int> level_set_strata(int l, int d, int s);

/// Same set from the two-range case split (d <= [l/2] and d >= [l/2]).
/// When d == [l/2] both ranges apply and must agree; returns nullopt if they don't.
std::optional<std::vector<int>> level_set_strata_by_range(int l, int d, int s);

// --- small degree strata ---------------------------------------------------

struct QuarticInvariants {
  std::array<Rational, 5> a;  // p = a0 X0^4 + 4a1 X0^3 X1 + 6a2 X0^2 X1^2 + 4a3 X0 X1^3 + a4 X1^4
  Rational g2;
  Rational g3;
  Rational delta;             // g2^3 - 27 g3^2
  std::optional<Rational> j;  // g2^3 / delta, absent when delta == 0
};

/// Throws std::invalid_argument unless deg p == 4.
QuarticInvariants quartic_invariants(const BinaryForm& p);

/// Cactus stratum of a nonzero quartic read off geometrically: 1 on the
/// Veronese curve, 2 on Z(g3) off it, 3 elsewhere.
int quartic_stratum(const BinaryForm& p);

/// a0 a2 - a1^2 for p = a0 X0^2 + 2 a1 X0 X1 + a2 X1^2.
Rational quadratic_discriminant(const BinaryForm& p);

/// Cactus stratum for l in {2, 3}: 1 iff p is a power of a linear form
/// (zero discriminant for l = 2), 2 otherwise.
int small_l_stratum(const BinaryForm& p);

}  // namespace apolar
