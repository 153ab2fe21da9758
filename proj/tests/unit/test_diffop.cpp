#include "flowvol/diffop.hpp"
#include "flowvol/render.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace flowvol;
namespace oracle = flowvol::testing;

namespace {

// Matrix of the whole system acting on degree-`degree` monomials, built with
// plain rational arithmetic for the reference nullity.
std::vector<std::vector<Rational>> system_matrix(const MultiplicityMatrix& m, unsigned degree) {
  const auto n = static_cast<std::size_t>(m.rank());
  const auto cols = monomials_of_degree(n, degree);
  std::vector<std::vector<Rational>> rows;
  for (const auto& op : pde_system(m).ops) {
    const long target = static_cast<long>(degree) - op.order();
    if (target < 0) continue;
    for (const auto& e : monomials_of_degree(n, static_cast<unsigned>(target))) {
      std::vector<Rational> row(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) row[c] = op.apply(MultiPoly::monomial(cols[c])).coefficient(e);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

TEST(DiffOperator, ApplyMatchesRepeatedPartials) {
  const auto a1 = MultiPoly::variable(2, 0);
  const auto a2 = MultiPoly::variable(2, 1);
  const MultiPoly p = pow(a1, 4) * pow(a2, 2) + Rational(3) * a1 * a2;
  const auto d1 = DiffOperator::partial(2, 0);
  const auto d2 = DiffOperator::partial(2, 1);
  EXPECT_EQ((d1 * d1 * d2).apply(p), partial(partial(partial(p, 0), 0), 1));
  EXPECT_EQ((d1 - d2).apply(p), partial(p, 0) - partial(p, 1));
  EXPECT_EQ(DiffOperator::identity(2).apply(p), p);
  EXPECT_TRUE(DiffOperator(2).apply(p).is_zero());
  EXPECT_THROW(d1.apply(MultiPoly::variable(3, 0)), std::invalid_argument);
}

TEST(DiffOperator, OrderAndRendering) {
  const auto d1 = DiffOperator::partial(3, 0);
  const auto d3 = DiffOperator::partial(3, 2);
  const auto op = pow(d1 - d3, 2) * d1;
  EXPECT_EQ(op.order(), 3);
  EXPECT_EQ(to_string(op), "d1^3 - 2*d1^2*d3 + d1*d3^2");
  EXPECT_EQ(DiffOperator(3).order(), -1);
}

TEST(PdeSystem, ExampleOperators) {
  const MultiplicityMatrix m(3, {1, 1, 2, 1, 2, 2});
  const auto sys = pde_system(m);
  ASSERT_EQ(sys.ops.size(), 3u);
  const auto d = [](std::size_t i) { return DiffOperator::partial(3, i); };
  EXPECT_EQ(sys.for_node(2), pow(d(2), 2));
  EXPECT_EQ(sys.for_node(1), (d(1) - d(2)) * pow(d(1), 2));
  EXPECT_EQ(sys.for_node(0), (d(0) - d(1)) * (d(0) - d(2)) * pow(d(0), 2));
  EXPECT_EQ(sys.ops.front(), sys.for_node(2));
}

TEST(PdeSystem, AnnihilatesVolume) {
  const MultiplicityMatrix m(3, {1, 1, 2, 1, 2, 2});
  EXPECT_TRUE(annihilates(m, iterated_residue(m)));
  VolumePolynomial wrong{m, MultiPoly::monomial({0, 0, 6})};
  EXPECT_FALSE(annihilates(m, wrong));
  EXPECT_THROW(annihilates(MultiplicityMatrix(3, std::vector<int>(6, 1)), iterated_residue(m)),
               std::invalid_argument);
}

TEST(NullSpace, SmallIntegerMatrix) {
  // x + y + z = 0, x - z = 0
  std::vector<std::vector<Integer>> rows{{1, 1, 1}, {1, 0, -1}};
  const auto basis = integer_null_space(rows, 3);
  ASSERT_EQ(basis.size(), 1u);
  const auto& v = basis.front();
  EXPECT_EQ(v[2], Rational(1));
  EXPECT_EQ(v[0], Rational(1));
  EXPECT_EQ(v[1], Rational(-2));
  EXPECT_THROW(integer_null_space({{1, 2}, {3}}, 2), std::invalid_argument);
  EXPECT_EQ(integer_null_space({}, 2).size(), 2u);
}

TEST(NullSpace, SolutionSpaceMatchesReference) {
  const MultiplicityMatrix m(3, {1, 1, 2, 1, 2, 2});
  for (unsigned deg = 0; deg <= 7; ++deg) {
    const auto basis = solution_space(m, deg);
    EXPECT_EQ(basis.size(), oracle::rational_nullity(system_matrix(m, deg), monomials_of_degree(3, deg).size()))
        << "degree " << deg;
    for (const auto& b : basis) {
      VolumePolynomial v{m, b};
      EXPECT_TRUE(annihilates(m, v)) << "degree " << deg;
    }
  }
}

TEST(NullSpace, GeneratorIsVolume) {
  const MultiplicityMatrix m(3, {1, 1, 2, 1, 2, 2});
  const auto basis = solution_space(m, 6);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis.front(), oracle::example_r3_volume());
  EXPECT_TRUE(solution_space(m, 7).empty());
}

TEST(Render, LatexFactorsContent) {
  EXPECT_EQ(to_latex(oracle::example_r3_volume()),
            "\\frac{1}{360} a_{1}^{3}(a_{1}^{3} + 6a_{1}^{2}a_{2} + 3a_{1}^{2}a_{3} + 15a_{1}a_{2}^{2} + "
            "15a_{1}a_{2}a_{3} + 10a_{2}^{3} + 30a_{2}^{2}a_{3})");
  EXPECT_EQ(to_latex(MultiPoly(2)), "0");
}
