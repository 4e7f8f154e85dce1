#include "entinv/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "entinv/errors.hpp"
#include "test_util.hpp"

using namespace entinv;
using entinv::testing::random_int_matrix;

TEST(Rational, LowestTerms) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(5)).denominator(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-6/4"), Rational(BigInt(-3), BigInt(2)));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_EQ(Rational::parse("-3/2").to_string(), "-3/2");
  EXPECT_THROW(Rational::parse("1/"), SyntaxError);
  EXPECT_THROW(Rational::parse("a"), SyntaxError);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rref, Examples) {
  auto a = rref(Mat{{1, 0}, {0, 0}});
  EXPECT_EQ(a.reduced, (Mat{{1, 0}, {0, 0}}));
  EXPECT_EQ(a.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(a.rank, 1u);

  auto b = rref(Mat{{2, 4}, {1, 2}});
  EXPECT_EQ(b.reduced, (Mat{{1, 2}, {0, 0}}));
  EXPECT_EQ(b.rank, 1u);

  auto c = rref(Mat{{1, 2}, {3, 4}});
  EXPECT_EQ(c.reduced, Mat::identity(2));
  EXPECT_EQ(c.rank, 2u);
  EXPECT_EQ(determinant(Mat{{1, 2}, {3, 4}}), Rational(-2));
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(Mat::identity(2)).dim(), 0u);
  const Subspace s = nullspace(Mat{{1, 0}, {0, 0}});
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis(), (Mat{{0, 1}}));
  EXPECT_EQ(nullspace(Mat{{1, 1, 1, 1}}).dim(), 3u);
}

TEST(KernelIntersection, Examples) {
  std::vector<Mat> lines{Mat{{1, 0}}, Mat{{0, 1}}};
  EXPECT_EQ(kernel_intersection(lines).dim(), 0u);
  std::vector<Mat> same{Mat{{1, 0}}, Mat{{1, 0}}};
  EXPECT_EQ(kernel_intersection(same), Subspace::span_of(Mat{{0, 1}}));
  EXPECT_THROW(kernel_intersection(std::vector<Mat>{}), EmptyFamily);
  std::vector<Mat> bad{Mat{{1, 0}}, Mat{{1, 0, 0}}};
  EXPECT_THROW(kernel_intersection(bad), ColumnMismatch);
}

TEST(KernelIntersection, RankOneRowsMatchDirectIntersection) {
  // Two rank-one 2x4 matrices with independent row spaces: the kernels are
  // 3-dimensional hyperplanes whose intersection must be 2-dimensional.
  std::vector<Mat> ms{Mat{{1, 2, 0, -1}, {2, 4, 0, -2}}, Mat{{0, 1, 3, 1}, {0, -1, -3, -1}}};
  const Subspace k = kernel_intersection(ms);
  EXPECT_EQ(k.dim(), 2u);
  // Oracle: each basis vector lies in both individual kernels.
  const Subspace k0 = nullspace(ms[0]);
  const Subspace k1 = nullspace(ms[1]);
  for (std::size_t r = 0; r < k.dim(); ++r) {
    EXPECT_TRUE(k0.contains(k.basis().row(r)));
    EXPECT_TRUE(k1.contains(k.basis().row(r)));
  }
}

TEST(OrthogonalComplement, Examples) {
  EXPECT_EQ(orthogonal_complement(Subspace::span_of(Mat{{1, 0}})), Subspace::span_of(Mat{{0, 1}}));
  EXPECT_EQ(orthogonal_complement(Subspace(3)).dim(), 3u);
  const Subspace c = orthogonal_complement(Subspace::span_of(Mat{{1, 1, 0}}));
  ASSERT_EQ(c.dim(), 2u);
  for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(c.basis()(r, 0) + c.basis()(r, 1), Rational(0));
}

TEST(KroneckerSubspace, Examples) {
  const Subspace s = kronecker_subspace(Subspace::span_of(Mat{{0, 1}}), 2);
  EXPECT_EQ(s, Subspace::span_of(Mat{{0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(kronecker_subspace(Subspace(3), 5).dim(), 0u);
  const Subspace t = kronecker_subspace(Subspace::span_of(Mat{{1, 0, 1}, {0, 1, 1}}), 4);
  EXPECT_EQ(t.dim(), 8u);
  EXPECT_EQ(t.ambient_dim(), 12u);
  EXPECT_THROW(kronecker_subspace(Subspace(2), 0), InvalidArgument);
}

TEST(LinalgProperties, RandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    Mat m = random_int_matrix(rng, rows, cols, -2, 2);
    if (trial % 3 == 0) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2);
    }
    const std::size_t r = rank(m);
    const Subspace null = nullspace(m);
    EXPECT_EQ(r + null.dim(), cols);
    EXPECT_EQ(r, rank(m.transpose()));
    for (std::size_t b = 0; b < null.dim(); ++b) {
      Mat col(cols, 1);
      for (std::size_t c = 0; c < cols; ++c) col(c, 0) = null.basis()(b, c);
      EXPECT_TRUE((m * col).is_zero());
    }
    const Subspace rowspace = Subspace::span_of(m);
    EXPECT_EQ(orthogonal_complement(orthogonal_complement(rowspace)), rowspace);
    EXPECT_EQ(orthogonal_complement(rowspace), null);

    // Scaling rows by nonzero rationals leaves the RREF unchanged.
    Mat scaled = m;
    for (std::size_t row = 0; row < rows; ++row) {
      const Rational f(BigInt(static_cast<long>(1 + rng() % 7)) * (rng() % 2 ? 1 : -1), BigInt(static_cast<long>(1 + rng() % 5)));
      for (std::size_t c = 0; c < cols; ++c) scaled(row, c) *= f;
    }
    EXPECT_EQ(rref(scaled).reduced, rref(m).reduced);

    Mat other = random_int_matrix(rng, 1 + rng() % 3, cols, -2, 2);
    std::vector<Mat> ab{m, other};
    std::vector<Mat> ba{other, m};
    EXPECT_EQ(kernel_intersection(ab), kernel_intersection(ba));
    std::vector<Mat> single{m};
    EXPECT_EQ(kernel_intersection(single), null);
  }
}
