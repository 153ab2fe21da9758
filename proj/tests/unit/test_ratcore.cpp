#include "flowvol/multiplicity.hpp"
#include "flowvol/multipoly.hpp"
#include "flowvol/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace flowvol;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational(" -2/4 "), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(binomial_series_coeff(3, 2), Rational(6));
  EXPECT_EQ(binomial_series_coeff(1, 7), Rational(1));
  EXPECT_THROW(binomial_series_coeff(0, 1), std::invalid_argument);
}

TEST(MultiPoly, ZeroRendersAsZero) {
  MultiPoly p(3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(to_string(p), "0");
  EXPECT_EQ(p.total_degree(), -1);
}

TEST(MultiPoly, CancellationRemovesTerms) {
  const auto a1 = MultiPoly::variable(2, 0);
  const auto diff = a1 - a1;
  EXPECT_TRUE(diff.is_zero());
  EXPECT_EQ(diff.size(), 0u);
}

TEST(MultiPoly, GradedLexRendering) {
  const auto a1 = MultiPoly::variable(3, 0);
  const auto a2 = MultiPoly::variable(3, 1);
  const auto a3 = MultiPoly::variable(3, 2);
  const MultiPoly p = a3 + Rational(1, 2) * a1 * a2 - pow(a2, 2) + MultiPoly::constant(3, -4);
  EXPECT_EQ(to_string(p), "1/2*a1*a2 - a2^2 + a3 - 4");
  std::ostringstream os;
  os << p;
  EXPECT_EQ(os.str(), to_string(p));
  EXPECT_EQ(to_string(p, "x"), "1/2*x1*x2 - x2^2 + x3 - 4");
}

TEST(MultiPoly, VariableCountMismatchThrows) {
  EXPECT_THROW(MultiPoly::variable(2, 0) + MultiPoly::variable(3, 0), std::invalid_argument);
  EXPECT_THROW(MultiPoly::variable(2, 0) * MultiPoly::variable(3, 0), std::invalid_argument);
}

TEST(MultiPoly, PartialAndEvaluate) {
  const auto a1 = MultiPoly::variable(2, 0);
  const auto a2 = MultiPoly::variable(2, 1);
  const MultiPoly p = pow(a1, 3) * a2 + Rational(2) * a2;
  EXPECT_EQ(partial(p, 0), Rational(3) * pow(a1, 2) * a2);
  EXPECT_EQ(partial(p, 1), pow(a1, 3) + MultiPoly::constant(2, 2));
  EXPECT_THROW(partial(p, 2), std::out_of_range);
  const std::vector<Rational> pt{Rational(1, 2), Rational(3)};
  EXPECT_EQ(evaluate(p, pt), Rational(3, 8) + Rational(6));
}

TEST(MultiPoly, HomogeneityAndParts) {
  const auto a1 = MultiPoly::variable(2, 0);
  const auto a2 = MultiPoly::variable(2, 1);
  EXPECT_TRUE((a1 * a2 + pow(a2, 2)).is_homogeneous());
  const MultiPoly mixed = a1 * a2 + a2;
  EXPECT_FALSE(mixed.is_homogeneous());
  EXPECT_EQ(homogeneous_part(mixed, 1), a2);
  EXPECT_EQ(homogeneous_part(mixed, 2), a1 * a2);
  EXPECT_EQ(homogeneous_part(mixed, 5), MultiPoly(2));
}

TEST(MultiPoly, EmbedShiftsVariables) {
  const auto b1 = MultiPoly::variable(2, 0);
  const auto b2 = MultiPoly::variable(2, 1);
  const MultiPoly e = embed(b1 * pow(b2, 2), 3, 1);
  EXPECT_EQ(e, MultiPoly::variable(3, 1) * pow(MultiPoly::variable(3, 2), 2));
}

TEST(MultiPoly, MonomialsOfDegree) {
  const auto monos = monomials_of_degree(3, 2);
  ASSERT_EQ(monos.size(), 6u);
  EXPECT_EQ(monos.front(), (Exponents{2, 0, 0}));
  EXPECT_EQ(monos.back(), (Exponents{0, 0, 2}));
  EXPECT_EQ(monomials_of_degree(4, 0).size(), 1u);
}

TEST(Multiplicity, Accessors) {
  const MultiplicityMatrix m(3, {1, 1, 2, 1, 2, 2});
  EXPECT_EQ(m(0, 3), 2);
  EXPECT_EQ(m(1, 2), 1);
  EXPECT_EQ(m.total(), 9);
  EXPECT_EQ(m.row_sum(0), 4);
  EXPECT_EQ(m.row_sum(1), 3);
  EXPECT_EQ(m.row_sum(2), 2);
  EXPECT_EQ(m.degree(), 6);
  EXPECT_EQ(m.lower_degree(), 3);
  EXPECT_EQ(m.sub_matrix(), MultiplicityMatrix(2, {1, 2, 2}));
  EXPECT_EQ(to_string(m), "(1,1,2,1,2,2)");
}

TEST(Multiplicity, RejectsInvalid) {
  EXPECT_THROW(MultiplicityMatrix(2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(MultiplicityMatrix(1, {0}), std::invalid_argument);
  EXPECT_THROW(MultiplicityMatrix(0, {}), std::invalid_argument);
  EXPECT_THROW(MultiplicityMatrix(2, {1, -1, 1}), std::invalid_argument);
}

TEST(Multiplicity, Enumerate) {
  EXPECT_EQ(enumerate_matrices(2, 1, 2).size(), 8u);
  EXPECT_EQ(enumerate_matrices(3, 1, 2).size(), 64u);
}
