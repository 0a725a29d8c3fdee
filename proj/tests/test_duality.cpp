#include "apolar/duality.hpp"
#include "apolar/apolarity.hpp"
#include "apolar/sampling.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace apolar;

TEST(DL, Examples) {
  EXPECT_EQ(d_l_forward(BinaryForm(RationalVector{0, 0, 1})).values, (RationalVector{0, 0, 2}));
  EXPECT_EQ(d_l_forward(BinaryForm(RationalVector{1, 1})).values, (RationalVector{1, 1}));
  EXPECT_EQ(d_l_forward(BinaryForm(4)), DualVector::zero(4));
  EXPECT_EQ(d_l_inverse(DualVector(3, {1, 0, 0, 0})), BinaryForm::monomial(0, 3, Rational(1, 6)));
  EXPECT_EQ(d_l_inverse(DualVector::zero(2)), BinaryForm(2));
}

TEST(DL, MutuallyInverse) {
  FormSampler s(51);
  for (int i = 0; i < 100; ++i) {
    const int l = static_cast<int>(s.uniform(0, 10));
    const BinaryForm p = s.rational_form(l, 20, 9);
    EXPECT_EQ(d_l_inverse(d_l_forward(p)), p);
    EXPECT_EQ(d_l_forward(p), oracle::d_l(p));
    RationalVector values;
    for (int k = 0; k <= l; ++k) values.push_back(s.rational(20, 9));
    const DualVector phi(l, values);
    EXPECT_EQ(d_l_forward(d_l_inverse(phi)), phi);
  }
}

TEST(TransposeMult, Examples) {
  const DualVector phi(3, {1, 2, 3, 4});
  EXPECT_EQ(transpose_mult(BinaryForm::monomial(0, 0), phi), phi);
  // Multiplying by X0 shifts the index: values'[s] = values[s + 1].
  EXPECT_EQ(transpose_mult(BinaryForm::monomial(1, 0), phi), DualVector(2, {2, 3, 4}));
  EXPECT_EQ(transpose_mult(BinaryForm::monomial(0, 1), phi), DualVector(2, {1, 2, 3}));
  EXPECT_EQ(transpose_mult(BinaryForm::monomial(1, 0), DualVector(1, {5, 7})), DualVector(0, {7}));
  EXPECT_THROW(transpose_mult(BinaryForm::monomial(4, 0), phi), std::invalid_argument);
}

TEST(TransposeMult, AdjointAndFunctorial) {
  FormSampler s(52);
  for (int i = 0; i < 150; ++i) {
    const int l = static_cast<int>(s.uniform(0, 9)), d1 = static_cast<int>(s.uniform(0, l));
    const int d2 = static_cast<int>(s.uniform(0, l - d1));
    const DualVector phi = d_l_forward(s.rational_form(l, 9, 5));
    const BinaryForm q1 = s.rational_form(d1, 9, 5), q2 = s.rational_form(d2, 9, 5);
    EXPECT_EQ(transpose_mult(q1, phi), oracle::transpose_mult(q1, phi));
    EXPECT_EQ(transpose_mult(multiply(q1, q2), phi), transpose_mult(q2, transpose_mult(q1, phi)));
    const BinaryForm r = s.rational_form(l - d1, 9, 5);
    EXPECT_EQ(transpose_mult(q1, phi).evaluate(r), phi.evaluate(multiply(q1, r)));
  }
}

TEST(Duality, FactorialFormulaOnMonomials) {
  for (int l = 0; l <= 6; ++l)
    for (int s0 = 0; s0 <= l; ++s0)
      for (int d = 0; d <= l; ++d)
        for (int k0 = 0; k0 <= d; ++k0) {
          const BinaryForm p = BinaryForm::monomial(s0, l - s0), q = BinaryForm::monomial(k0, d - k0);
          EXPECT_TRUE(verify_duality(p, q));
          // Values of q^t D_l(p) are (a0+k0)!(a1+k1)! at the matching exponent, else 0.
          const DualVector lhs = transpose_mult(q, d_l_forward(p));
          for (int a0 = 0; a0 <= l - d; ++a0) {
            const bool hit = a0 + k0 == s0;
            const Rational expected = hit ? Rational(factorial(static_cast<unsigned long>(s0)) *
                                                     factorial(static_cast<unsigned long>(l - s0)))
                                          : Rational(0);
            EXPECT_EQ(lhs.values[static_cast<std::size_t>(a0)], expected);
          }
        }
}

TEST(Duality, RandomPairs) {
  FormSampler s(53);
  for (int i = 0; i < 200; ++i) {
    const int l = static_cast<int>(s.uniform(0, 8)), d = static_cast<int>(s.uniform(0, l));
    EXPECT_TRUE(verify_duality(s.rational_form(l, 9, 7), s.rational_form(d, 9, 7)));
  }
  EXPECT_TRUE(verify_duality(BinaryForm::monomial(3, 2), BinaryForm::monomial(0, 0, 5)));
  EXPECT_THROW(verify_duality(BinaryForm::monomial(1, 0), BinaryForm::monomial(2, 0)), std::invalid_argument);
}

TEST(Coker, Examples) {
  FormSampler s(54);
  const BinaryForm generic = s.integer_form(6, 10);
  ASSERT_EQ(cactus_rank(generic), 4);
  EXPECT_EQ(coker_dim(generic, 1), 4);
  for (int l = 1; l <= 8; ++l)
    for (int d = 1; d <= l; ++d) EXPECT_EQ(coker_dim(BinaryForm::monomial(l, 0), d), l - d);
  for (int l = 2; l <= 8; ++l) EXPECT_EQ(coker_dim(s.integer_form(l, 10), l), 0);
}

TEST(Coker, ClosedFormBranches) {
  EXPECT_EQ(coker_dim_closed_form(6, 5, 4).branch, CokerBranch::Vanishing);
  EXPECT_EQ(coker_dim_closed_form(6, 3, 1).branch, CokerBranch::CactusDependent);
  EXPECT_EQ(coker_dim_closed_form(6, 3, 1).dimension, 3);
  EXPECT_EQ(coker_dim_closed_form(6, 1, 4).branch, CokerBranch::Generic);
  EXPECT_EQ(coker_dim_closed_form(6, 1, 4).dimension, 4);
  EXPECT_EQ(to_string(CokerBranch::CactusDependent), "cactus_dependent");
}

TEST(Coker, AgreesWithAnnihilatorCount) {
  FormSampler s(55);
  for (int l = 0; l <= 9; ++l)
    for (const BinaryForm& p : form_corpus(l, s, 10)) {
      const int r = cactus_rank(p);
      for (int d = 0; d <= l; ++d) {
        const int c = coker_dim(p, d);
        EXPECT_EQ(c, l - 2 * d + ann_dim(p, d)) << render(p) << " d = " << d;
        EXPECT_EQ(c, coker_dim_closed_form(l, d, r).dimension) << render(p) << " d = " << d;
        const RationalMatrix m = transpose_mult_matrix(d_l_forward(p), d);
        EXPECT_EQ(c, static_cast<int>(m.rows() - rank(m)));
      }
    }
}
