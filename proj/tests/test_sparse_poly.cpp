#include "mnrule/error.hpp"
#include "mnrule/sparse_poly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mnrule;

namespace {
SparsePoly x(int i) { return SparsePoly::variable(i); }
}  // namespace

TEST(SparsePoly, ArithmeticAndZeroes) {
  auto f = x(1) + x(2);
  EXPECT_EQ((f - x(1) - x(2)).term_count(), 0u);
  EXPECT_TRUE((f * 0).is_zero());
  auto sq = f * f;
  EXPECT_EQ(sq.coefficient({1, 1}), 2);
  EXPECT_EQ(sq.coefficient({2}), 1);
  EXPECT_EQ(sq.total_degree(), 2);
  EXPECT_TRUE(sq.is_homogeneous());
  EXPECT_FALSE((sq + 1).is_homogeneous());
  EXPECT_EQ((sq + 1).homogeneous_components().size(), 2u);
  EXPECT_EQ(SparsePoly::monomial({0, 0, 0}), SparsePoly(1));
  EXPECT_EQ((x(3) * x(1)).num_variables(), 3);
  EXPECT_EQ((x(1) * x(1) * x(3) + x(2)).max_exponents(), (Monomial{2, 1, 1}));
}

TEST(SparsePoly, BigCoefficientsStayExact) {
  auto f = pow(x(1) + x(2), 70);
  // binomial(70, 35) exceeds 64 bits.
  EXPECT_EQ(f.coefficient({35, 35}), Integer("112186277816662845432"));
}

TEST(SparsePoly, TextRoundTrip) {
  auto f = SparsePoly::parse("3*x1^2*x3 - x2");
  EXPECT_EQ(f.coefficient({2, 0, 1}), 3);
  EXPECT_EQ(f.coefficient({0, 1}), -1);
  EXPECT_EQ(f.to_string(), "3*x1^2*x3 - x2");
  EXPECT_EQ(SparsePoly().to_string(), "0");
  EXPECT_EQ(SparsePoly::parse("-2 + x1*x1").to_string(), "x1^2 - 2");
  EXPECT_EQ(SparsePoly::parse(" x2 * 5 "), x(2) * 5);
  EXPECT_THROW(SparsePoly::parse(""), InvalidArgument);
  EXPECT_THROW(SparsePoly::parse("x0"), InvalidArgument);
  EXPECT_THROW(SparsePoly::parse("x1 x2"), InvalidArgument);
  EXPECT_THROW(SparsePoly::parse("y1"), InvalidArgument);

  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_poly(rng, 4, 5, 6);
    EXPECT_EQ(SparsePoly::parse(g.to_string()), g) << g.to_string();
  }
}

TEST(SparsePoly, MultiplicationAgreesWithEvaluation) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto f = oracle::random_poly(rng, 3, 3, 4);
    auto g = oracle::random_poly(rng, 3, 3, 4);
    const std::vector<long long> pt{2, -3, 5};
    EXPECT_EQ(oracle::evaluate(f * g, pt), oracle::evaluate(f, pt) * oracle::evaluate(g, pt));
  }
}

TEST(DividedDifference, Basics) {
  EXPECT_EQ(divided_difference(x(1), 1), SparsePoly(1));
  EXPECT_EQ(divided_difference(x(2), 1), SparsePoly(-1));
  EXPECT_TRUE(divided_difference(x(1) + x(2), 1).is_zero());
  EXPECT_TRUE(divided_difference(x(1) * x(2), 1).is_zero());
  EXPECT_TRUE(divided_difference(x(3), 1).is_zero());
  EXPECT_EQ(divided_difference(x(1) * x(1), 1), x(1) + x(2));
  EXPECT_THROW(divided_difference(x(1), 0), InvalidArgument);
}

TEST(DividedDifference, DefiningIdentity) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    auto f = oracle::random_poly(rng, 4, 6, 6);
    for (int i = 1; i <= 4; ++i) {
      auto d = divided_difference(f, i);
      EXPECT_EQ((x(i) - x(i + 1)) * d, f - f.swap_variables(i));
    }
  }
}

TEST(DividedDifference, NilpotentAndBraid) {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto f = oracle::random_poly(rng, 4, 6, 7);
    for (int i = 1; i <= 3; ++i) {
      EXPECT_TRUE(divided_difference(divided_difference(f, i), i).is_zero());
      auto lhs = divided_difference(divided_difference(divided_difference(f, i), i + 1), i);
      auto rhs = divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1);
      EXPECT_EQ(lhs, rhs);
    }
    EXPECT_EQ(divided_difference(divided_difference(f, 1), 3), divided_difference(divided_difference(f, 3), 1));
  }
}
