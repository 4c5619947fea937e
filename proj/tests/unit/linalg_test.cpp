#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "midtree/matrix.hpp"
#include "midtree/polynomial.hpp"
#include "midtree/rational.hpp"
#include "test_support.hpp"

namespace midtree {
namespace {

using testing::laplace_determinant;
using testing::q;
using testing::random_rows;
using testing::rows_of;

RationalMatrix fixed_4x4() {
  return RationalMatrix::from_rows({{q(1, 2), q(-3), q(0), q(7, 9)},
                                    {q(2), q(5, 4), q(-1, 3), q(0)},
                                    {q(0), q(4), q(2, 7), q(-6)},
                                    {q(8, 5), q(0), q(1), q(-1, 2)}});
}

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(parse_rational("3"), q(3));
  EXPECT_EQ(parse_rational("2/4"), q(1, 2));
  EXPECT_EQ(parse_rational("-6/8"), q(-3, 4));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(q(-2, 3)), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("/3"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, PowConventions) {
  EXPECT_EQ(pow(q(0), 0), q(1));
  EXPECT_EQ(pow(q(2, 3), 3), q(8, 27));
  EXPECT_EQ(pow(q(2, 3), -2), q(9, 4));
  EXPECT_THROW(pow(q(0), -1), std::domain_error);
}

TEST(Determinant, SmallExamples) {
  EXPECT_EQ(determinant(RationalMatrix::from_rows({{q(2), q(-1)}, {q(-1), q(2)}})), q(3));
  EXPECT_EQ(determinant(RationalMatrix{}), q(1));
  EXPECT_EQ(determinant(RationalMatrix::from_rows({{q(0), q(1)}, {q(1), q(0)}})), q(-1));
  EXPECT_EQ(determinant(RationalMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}})), q(0));
}

TEST(Determinant, FrozenFourByFour) {
  // Value from an independent sympy evaluation.
  EXPECT_EQ(determinant(fixed_4x4()), q(300467, 7560));
  EXPECT_EQ(laplace_determinant(rows_of(fixed_4x4())), q(300467, 7560));
}

TEST(Determinant, MatchesLaplaceExpansion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng() % 6;
    const auto rows = random_rows(rng, n);
    EXPECT_EQ(determinant(n == 0 ? RationalMatrix{} : RationalMatrix::from_rows(rows)),
              laplace_determinant(rows))
        << "trial " << trial;
  }
}

TEST(Determinant, RejectsNonSquare) {
  EXPECT_THROW(determinant(RationalMatrix({"a"}, {"x", "y"})), std::invalid_argument);
}

TEST(DeleteRowCol, KeepsLabelOrder) {
  RationalMatrix a({"u", "v", "w"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = q(static_cast<long>(3 * i + j));

  const RationalMatrix uv = delete_row_col(a, "w");
  EXPECT_EQ(uv.row_labels(), (std::vector<std::string>{"u", "v"}));
  EXPECT_EQ(uv.at("u", "v"), q(1));
  EXPECT_EQ(uv.at("v", "v"), q(4));

  RationalMatrix b({"u", "v"});
  b(1, 1) = q(7);
  const RationalMatrix only_v = delete_row_col(b, "u");
  ASSERT_EQ(only_v.rows(), 1U);
  EXPECT_EQ(only_v.at("v", "v"), q(7));

  const RationalMatrix empty = delete_row_col(RationalMatrix({"x"}), "x");
  EXPECT_EQ(empty.rows(), 0U);
  EXPECT_THROW(delete_row_col(a, "zz"), std::out_of_range);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(RationalMatrix::from_rows({{q(5, 2)}})),
            RationalPolynomial({q(-5, 2), q(1)}));
  EXPECT_EQ(char_poly(RationalMatrix::from_rows({{q(2), q(-1)}, {q(-1), q(2)}})),
            RationalPolynomial({q(3), q(-4), q(1)}));
  // Triangular: product of (lambda - diagonal) = lambda (lambda - 1)^2.
  EXPECT_EQ(char_poly(RationalMatrix::from_rows(
                {{q(1), q(-1), q(0)}, {q(0), q(1), q(-1)}, {q(0), q(0), q(0)}})),
            RationalPolynomial({q(0), q(1), q(-2), q(1)}));
  EXPECT_EQ(char_poly(RationalMatrix{}), RationalPolynomial::constant(1));
}

TEST(CharPoly, FrozenFourByFour) {
  // Coefficients from an independent sympy expansion of det(lI - A).
  EXPECT_EQ(char_poly(fixed_4x4()),
            RationalPolynomial({q(300467, 7560), q(-34873, 5040), q(15367, 1260), q(-43, 28), q(1)}));
}

TEST(CharPoly, MonicAndConstantTermProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const RationalMatrix a = RationalMatrix::from_rows(random_rows(rng, n));
    const RationalPolynomial f = char_poly(a);
    EXPECT_EQ(f.degree(), static_cast<long>(n));
    EXPECT_TRUE(f.is_monic());
    const Rational det = determinant(a);
    EXPECT_EQ(f.evaluate(0), n % 2 == 0 ? det : Rational(-det));
  }
}

TEST(AdjugateTrace, Examples) {
  EXPECT_EQ(adjugate_trace(RationalMatrix::from_rows({{q(5)}})), q(1));
  EXPECT_EQ(adjugate_trace(RationalMatrix::from_rows({{q(2), q(-1)}, {q(-1), q(2)}})), q(4));
  // sympy: tr(adj B) = 85/6.
  EXPECT_EQ(adjugate_trace(RationalMatrix::from_rows(
                {{q(3), q(-1), q(1, 2)}, {q(0), q(2), q(-4)}, {q(5, 3), q(1), q(1)}})),
            q(85, 6));
  EXPECT_THROW(adjugate_trace(RationalMatrix{}), std::invalid_argument);
}

TEST(AdjugateTrace, EqualsSumOfPrincipalMinors) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto rows = random_rows(rng, n);
    const RationalMatrix a = RationalMatrix::from_rows(rows);
    Rational via_laplace = 0;
    for (std::size_t k = 0; k < n; ++k) via_laplace += laplace_determinant(rows_of(delete_row_col(a, k)));
    EXPECT_EQ(adjugate_trace(a), via_laplace);

    Rational via_minors = 0;
    for (const auto& label : a.row_labels()) via_minors += determinant(delete_row_col(a, label));
    EXPECT_EQ(adjugate_trace(a), via_minors);
  }
}

TEST(Polynomial, ArithmeticAndRendering) {
  const auto x_minus_1 = RationalPolynomial::linear_factor(1);
  EXPECT_EQ(x_minus_1.pow(2), RationalPolynomial({q(1), q(-2), q(1)}));
  EXPECT_EQ(x_minus_1.pow(0), RationalPolynomial::constant(1));
  EXPECT_EQ(to_string(RationalPolynomial({q(0), q(-1, 2), q(1)})), "0 -1/2 1");
  EXPECT_EQ(to_string(RationalPolynomial{}), "0");
  EXPECT_EQ((x_minus_1 + RationalPolynomial({q(1), q(-1)})), RationalPolynomial{});
  EXPECT_EQ(RationalPolynomial({q(1), q(2), q(0), q(0)}).degree(), 1);
}

TEST(Matrix, ProductShapesAndLabels) {
  RationalMatrix a({"r1", "r2"}, {"k"});
  RationalMatrix b({"k"}, {"c1", "c2", "c3"});
  a(0, 0) = 2;
  a(1, 0) = 3;
  b(0, 2) = 5;
  const RationalMatrix c = a * b;
  EXPECT_EQ(c.rows(), 2U);
  EXPECT_EQ(c.cols(), 3U);
  EXPECT_EQ(c.at("r2", "c3"), q(15));
  EXPECT_THROW(b * b, std::invalid_argument);
}

}  // namespace
}  // namespace midtree
