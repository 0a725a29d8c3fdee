#include "apolar/apolarity.hpp"
#include "apolar/moduli.hpp"
#include "apolar/sampling.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

BinaryForm f(std::string_view text) { return parse_expression(text); }

}  // namespace

TEST(Splitting, ParseAndValidate) {
  EXPECT_EQ(parse_splitting("-3:1,-5:1"), (SplittingType{{-3, 1}, {-5, 1}}));
  EXPECT_EQ(parse_splitting("-4:2"), (SplittingType{{-4, 2}}));
  for (const char* bad : {"", "-3:1,-3:1", "-5:1,-3:1", "-3:0", "-3", "a:1", "-3:1,", "-3:1:2"})
    EXPECT_THROW(parse_splitting(bad), std::invalid_argument) << bad;
}

TEST(Describe, Examples) {
  const ModuliDescriptor two = describe({{-3, 1}, {-5, 1}});
  EXPECT_EQ(two.l, (std::vector<int>{1, 3}));
  EXPECT_EQ(two.h1_dim, 6);
  EXPECT_EQ(two.aut_block_degrees[0][1], 2);
  EXPECT_EQ(two.aut_block_degrees[0][0], 0);
  EXPECT_EQ(two.aut_dim, 5);

  const ModuliDescriptor one = describe({{-4, 2}});
  EXPECT_EQ(one.h1_dim, 6);
  EXPECT_EQ(one.aut_dim, 4);

  const ModuliDescriptor trivial = describe({{0, 1}, {-1, 2}});
  EXPECT_EQ(trivial.h1_dim, 0);
}

TEST(Action, Rank2Examples) {
  const DualVector phi1(1, {1, 2}), phi2(3, {1, -1, 2, 5});
  EXPECT_EQ(act_rank2({2, 3, BinaryForm(2)}, phi1, phi2), std::pair(2 * phi1, 3 * phi2));

  FormSampler s(61);
  for (int i = 0; i < 30; ++i) {
    const BinaryForm q = s.rational_form(2, 5, 3);
    const auto [a1, a2] = act_rank2({1, 1, q}, phi1, phi2);
    EXPECT_EQ(a1, phi1 + oracle::transpose_mult(q, phi2));
    EXPECT_EQ(a2, phi2);
  }
}

TEST(Action, Rank2GroupLaw) {
  FormSampler s(62);
  for (int i = 0; i < 100; ++i) {
    const int l1 = static_cast<int>(s.uniform(0, 5)), l2 = static_cast<int>(s.uniform(l1 + 1, 8));
    const DualVector phi1 = d_l_forward(s.rational_form(l1, 9, 5)), phi2 = d_l_forward(s.rational_form(l2, 9, 5));
    const Rank2Automorphism a{s.rational(5, 3) + 6, s.rational(5, 3) - 6, s.rational_form(l2 - l1, 5, 3)};
    const Rank2Automorphism b{s.rational(5, 3) + 6, s.rational(5, 3) - 6, s.rational_form(l2 - l1, 5, 3)};
    const auto [b1, b2] = act_rank2(b, phi1, phi2);
    EXPECT_EQ(act_rank2(compose(a, b), phi1, phi2), act_rank2(a, b1, b2));
  }
}

TEST(Action, BlockGroupLaw) {
  FormSampler s(63);
  for (int i = 0; i < 50; ++i) {
    const SplittingType type = s.splitting(3, 2, -9);
    const BlockAutomorphism a = s.automorphism(type, 3), b = s.automorphism(type, 3);
    ASSERT_TRUE(a.is_invertible());
    const H1Element phi = s.h1_element(type, 9, 5);
    EXPECT_EQ(act(BlockAutomorphism::identity(type), phi), phi);
    EXPECT_EQ(act(compose(a, b), phi), act(a, act(b, phi)));
    EXPECT_EQ(act(a, zero_h1(type)), zero_h1(type));
  }
}

TEST(Action, RejectsBadInput) {
  const SplittingType type{{-3, 1}, {-5, 1}};
  BlockAutomorphism singular(type);
  singular.entry(0, 0, 0, 0) = BinaryForm::monomial(0, 0, 1);
  EXPECT_FALSE(singular.is_invertible());
  EXPECT_THROW(act(singular, zero_h1(type)), std::invalid_argument);
  EXPECT_THROW(act(BlockAutomorphism::identity(type), zero_h1({{-4, 2}})), std::invalid_argument);
  EXPECT_THROW(BlockAutomorphism::identity(type).entry(1, 0, 0, 0), std::out_of_range);
}

TEST(FiberDim, Examples) {
  EXPECT_EQ(fiber_dim(-3, -6, f("X0^4")), 1);
  const FiberReport quad = fiber_report(-3, -4, f("X0^2 + X1^2"));
  EXPECT_EQ(quad.fiber_dim, 0);
  EXPECT_EQ(quad.branch, CokerBranch::Generic);
  EXPECT_EQ(fiber_report(-3, -6, f("X0^4")).branch, CokerBranch::CactusDependent);
  // n1 = -2 gives d = l.
  EXPECT_EQ(fiber_dim(-2, -7, f("X0^5 + X1^5 + X0*X1^4")), 0);
  EXPECT_THROW(fiber_dim(-3, -5, f("X0^2")), std::invalid_argument);
  EXPECT_THROW(fiber_dim(-1, -4, f("X0^2")), std::invalid_argument);
  EXPECT_THROW(fiber_dim(-4, -3, f("X0")), std::invalid_argument);
  EXPECT_THROW(fiber_dim(-3, -4, BinaryForm(2)), ZeroFormError);
}

TEST(FiberDim, FunctionalRouteAndGl2Invariance) {
  FormSampler s(64);
  for (int i = 0; i < 80; ++i) {
    const int l = static_cast<int>(s.uniform(1, 8)), d = static_cast<int>(s.uniform(1, l));
    const int n2 = -2 - l, n1 = n2 + d;
    const BinaryForm p = i % 2 ? s.integer_form(l, 6) : s.factored_form(l, 4);
    EXPECT_EQ(fiber_dim(n1, n2, p), fiber_dim_of_functional(n1, n2, d_l_forward(p)));
    EXPECT_EQ(fiber_dim(n1, n2, substitute(p, s.substitution(3))), fiber_dim(n1, n2, p));
  }
}

TEST(Strata, Examples) {
  const StratumMembership power = stratum_membership(f("X0^4"), 2);
  EXPECT_EQ(power.cactus_rank, 1);
  EXPECT_EQ(power.fiber_dim, 2);
  FormSampler s(65);
  const StratumMembership generic = stratum_membership(s.integer_form(4, 10), 2);
  EXPECT_EQ(generic.cactus_rank, 3);
  EXPECT_EQ(generic.fiber_dim, 0);
  for (int i = 0; i < 10; ++i) {
    const BinaryForm p = s.integer_form(5, 10);
    if (is_linear_power(p)) continue;
    EXPECT_EQ(stratum_membership(p, 1).fiber_dim, 3);
  }
}

TEST(Strata, LevelSets) {
  EXPECT_EQ(level_set_strata(6, 2, 2), (std::vector<int>{3, 4}));
  EXPECT_EQ(level_set_strata(6, 2, 4), (std::vector<int>{1}));
  EXPECT_EQ(level_set_strata(6, 2, 1), std::vector<int>{});
  EXPECT_EQ(level_set_strata(6, 5, 0), (std::vector<int>{2, 3, 4}));
  for (int l = 0; l <= 12; ++l)
    for (int d = 0; d <= l; ++d)
      for (int s = 0; s <= l + 1; ++s) {
        const auto listed = level_set_strata(l, d, s);
        for (int r = 1; r <= l / 2 + 1; ++r)
          EXPECT_EQ(std::find(listed.begin(), listed.end(), r) != listed.end(),
                    satisfies_level_set_formula(l, d, r, s) && s == coker_dim_closed_form(l, d, r).dimension)
              << l << ' ' << d << ' ' << r << ' ' << s;
        const auto by_range = level_set_strata_by_range(l, d, s);
        ASSERT_TRUE(by_range.has_value());
        EXPECT_EQ(*by_range, listed);
      }
}

TEST(Strata, CorpusConsistency) {
  FormSampler s(66);
  for (int l = 0; l <= 9; ++l)
    for (const BinaryForm& p : form_corpus(l, s, 10))
      for (int d = 0; d <= l; ++d) {
        const StratumMembership m = stratum_membership(p, d);
        EXPECT_TRUE(satisfies_level_set_formula(l, d, m.cactus_rank, m.fiber_dim));
        const auto listed = level_set_strata(l, d, m.fiber_dim);
        EXPECT_NE(std::find(listed.begin(), listed.end(), m.cactus_rank), listed.end());
      }
}

TEST(SmallDegrees, Strata) {
  EXPECT_EQ(small_l_stratum(f("X0*X1")), 2);
  EXPECT_EQ(small_l_stratum(f("(X0+X1)^2")), 1);
  EXPECT_EQ(small_l_stratum(f("X0^2*X1")), 2);
  EXPECT_EQ(small_l_stratum(f("X0^3 + X1^3")), 2);
  EXPECT_EQ(small_l_stratum(f("(2*X0-X1)^3")), 1);
  EXPECT_EQ(quadratic_discriminant(f("X0^2 + 2*X0*X1 + X1^2")), 0);
  EXPECT_EQ(quadratic_discriminant(f("X0*X1")), Rational(-1, 4));
  EXPECT_THROW(small_l_stratum(f("X0^4")), std::invalid_argument);

  FormSampler s(67);
  for (int l = 2; l <= 3; ++l)
    for (const BinaryForm& p : form_corpus(l, s, 30)) EXPECT_EQ(small_l_stratum(p), cactus_rank(p)) << render(p);
}
