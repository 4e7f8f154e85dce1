#include <gtest/gtest.h>

#include "entinv/errors.hpp"
#include "entinv/operator_expr.hpp"
#include "entinv/state_text.hpp"
#include "test_util.hpp"

using namespace entinv;
using entinv::testing::st;

TEST(OperatorExpr, FlipsSquareToIdentity) {
  const auto a1 = OperatorExpr::flip(1);
  EXPECT_EQ(a1 * a1, OperatorExpr::constant(1));
  EXPECT_EQ(OperatorExpr::parse("a_1 a_1"), OperatorExpr::constant(1));
}

TEST(OperatorExpr, ParsesSpellingsAndBindings) {
  const auto e = OperatorExpr::parse("1+a1*a_2");
  EXPECT_EQ(e, OperatorExpr::parse("1 + a_1 a_2"));
  EXPECT_EQ(OperatorExpr::parse("1+a_i a_j", {2, 3}), OperatorExpr::parse("1+a2 a3"));
  EXPECT_EQ(OperatorExpr::parse("(1+a_1)(1-a_1)"), OperatorExpr{});
  EXPECT_EQ(e.max_subsystem(), 2);
}

TEST(OperatorExpr, RejectsMalformedText) {
  EXPECT_THROW(OperatorExpr::parse("1+"), SyntaxError);
  EXPECT_THROW(OperatorExpr::parse("(1+a_1"), SyntaxError);
  EXPECT_THROW(OperatorExpr::parse("a_k", {1, 2}), InvalidArgument);
  EXPECT_THROW(OperatorExpr::parse(""), SyntaxError);
}

TEST(OperatorExpr, RepresentativesFromTheVectorOfOnes) {
  const Shape s3({2, 2, 2});
  EXPECT_EQ(rep_from_operator(OperatorExpr::parse("1+a_1 a_2 a_3"), s3), st("[1,1,1]+[2,2,2]", {2, 2, 2}));
  EXPECT_EQ(rep_from_operator(OperatorExpr::parse("1+a_1(a_2+a_3)"), s3), st("[1,1,1]+[2,2,1]+[2,1,2]", {2, 2, 2}));
  const auto v = rep_from_operator(OperatorExpr::parse("(1+a_1 a_2)(1+a_3 a_4)"), Shape({2, 2, 2, 2}));
  EXPECT_EQ(v.term_count(), 4u);
  EXPECT_EQ(rep_from_operator(OperatorExpr::parse("c+2a_1", {}, Rational(3)), Shape({2, 2})),
            st("3*[1,1]+2*[2,1]", {2, 2}));
}

TEST(OperatorExpr, ShapeChecks) {
  EXPECT_THROW(rep_from_operator(OperatorExpr::parse("1+a_1"), Shape({2, 3})), NonQubitShape);
  EXPECT_THROW(rep_from_operator(OperatorExpr::parse("1+a_4"), Shape({2, 2, 2})), ArityMismatch);
}
