#include "apolar/binary_form.hpp"
#include "apolar/sampling.hpp"

#include <gtest/gtest.h>

using namespace apolar;

TEST(Render, Canonical) {
  EXPECT_EQ(render(parse_expression("X1^3*(-1/2) + X0^2*X1")), "X0^2*X1 - 1/2*X1^3");
  EXPECT_EQ(render(BinaryForm(3)), "0*X1^3");
  EXPECT_EQ(render(BinaryForm(0)), "0");
  EXPECT_EQ(render(BinaryForm::monomial(2, 1, -1)), "-X0^2*X1");
  EXPECT_EQ(render(BinaryForm::monomial(1, 0), kDualVariables), "xi0");
}

TEST(Parse, Expressions) {
  EXPECT_EQ(parse_expression("(X0+X1)^2"), parse_expression("X0^2 + 2*X0*X1 + X1^2"));
  EXPECT_EQ(parse_expression("xi0*xi1 - x0*x1"), BinaryForm(2));
  EXPECT_EQ(parse_expression("X0^2/4"), BinaryForm::monomial(2, 0, Rational(1, 4)));
  EXPECT_EQ(parse_expression("-(X0 - 3/2*X1)"), BinaryForm::linear(-1, Rational(3, 2)));
  EXPECT_EQ(parse_expression("0").degree(), 0);
  EXPECT_EQ(parse_expression("0*X1^4").degree(), 4);
}

TEST(Parse, Rejects) {
  for (const char* bad : {"", "X0 +", "X0 + X1^2", "X2", "X0/X1", "X0/0", "(X0", "X0^-1", "1/0", "X0 X1"})
    EXPECT_THROW(parse_expression(bad), std::invalid_argument) << bad;
}

TEST(Parse, JsonCoefficients) {
  EXPECT_EQ(parse_form(R"({"degree": 2, "coeffs": ["1", "-1/2", "3"]})"), (BinaryForm(RationalVector{1, Rational(-1, 2), 3})));
  EXPECT_EQ(parse_form(R"({"degree": 1, "coeffs": [0, 2]})"), BinaryForm::monomial(1, 0, 2));
  EXPECT_THROW(parse_form(R"({"degree": 3, "coeffs": ["1"]})"), std::invalid_argument);
  EXPECT_THROW(parse_form(R"({"coeffs": ["1/0"]})"), std::invalid_argument);
  EXPECT_EQ(parse_form("X0^3 - X1^3"), parse_expression("X0^3 - X1^3"));
}

TEST(RoundTrip, RenderThenParse) {
  FormSampler s(31);
  for (int i = 0; i < 300; ++i) {
    const int l = static_cast<int>(s.uniform(0, 9));
    const BinaryForm p = i % 7 == 0 ? BinaryForm(l) : s.rational_form(l, 50, 30);
    EXPECT_EQ(parse_form(render(p)), p) << render(p);
    EXPECT_EQ(parse_form(render(p, kDualVariables)), p);
  }
}
