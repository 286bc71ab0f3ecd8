#include "kcycle/exactla.hpp"

#include <gtest/gtest.h>

using namespace kcycle;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = static_cast<Index>(rows.begin()->size());
  RationalMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

// Random matrix of rank at most `r`, built as a product.
RationalMatrix low_rank(Index rows, Index cols, Index r, std::uint64_t seed) {
  return random_matrix(rows, r, seed, 5) * random_matrix(r, cols, mix_seed(seed, 1), 5);
}

}  // namespace

TEST(Rank, SmallExamples) {
  EXPECT_EQ(rank(RationalMatrix::Identity(2, 2)), 2);
  EXPECT_EQ(rank(RationalMatrix::Zero(3, 3)), 0);
  EXPECT_EQ(rank(mat({{1, 2}, {2, 4}})), 1);
  EXPECT_EQ(rank(RationalMatrix(0, 4)), 0);
  EXPECT_EQ(rank(RationalMatrix(3, 0)), 0);
}

TEST(Rank, HandlesFractions) {
  RationalMatrix m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(1);
  EXPECT_EQ(rank(m), 1);
  m(1, 1) = Rational(2);
  EXPECT_EQ(rank(m), 2);
}

TEST(Rank, BareissAgreesWithGaussJordan) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Index rows = 1 + static_cast<Index>(seed % 6), cols = 1 + static_cast<Index>((seed / 6) % 6);
    const Index r = static_cast<Index>(seed % (std::min(rows, cols) + 1));
    RationalMatrix m = low_rank(rows, cols, r, seed);
    m.row(0) /= Rational(7);  // exercise denominator clearing
    EXPECT_EQ(bareiss_rank(clear_denominators(m)), reduced_echelon(m).rank()) << seed;
    EXPECT_EQ(rank(m), r) << seed;
  }
}

TEST(Rank, RankPlusNullityAndTranspose) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Index rows = 1 + static_cast<Index>(mix_seed(seed, 0) % 7);
    const Index cols = 1 + static_cast<Index>(mix_seed(seed, 1) % 7);
    const Index r = static_cast<Index>(mix_seed(seed, 2) % (std::min(rows, cols) + 1));
    const auto m = low_rank(rows, cols, r, seed);
    EXPECT_EQ(rank(m) + kernel(m).dim(), cols);
    EXPECT_EQ(rank(m), rank(RationalMatrix(m.transpose())));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(RationalMatrix::Identity(2, 2)).dim(), 0);
  EXPECT_EQ(kernel(RationalMatrix::Zero(2, 3)).dim(), 3);
  const auto k = kernel(mat({{1, 1}}));
  ASSERT_EQ(k.dim(), 1);
  EXPECT_TRUE(k.contains(mat({{1}, {-1}})));
}

TEST(Kernel, VectorsAreAnnihilated) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = low_rank(4, 6, 1 + seed % 4, seed);
    const auto k = kernel(m);
    EXPECT_TRUE((m * k.basis()).isZero());
  }
}

TEST(SolveHomogeneous, Examples) {
  EXPECT_EQ(solve_homogeneous(RationalMatrix(0, 3)).dim(), 3);
  EXPECT_EQ(solve_homogeneous(RationalMatrix::Identity(3, 3)).dim(), 0);
  const auto s = solve_homogeneous(mat({{1, 1}}));
  ASSERT_EQ(s.dim(), 1);
  EXPECT_TRUE(s.contains(mat({{1}, {-1}})));
}

TEST(Subspace, SumIntersectionFormula) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = Subspace::span(low_rank(6, 4, 1 + seed % 4, seed));
    const auto b = Subspace::span(low_rank(6, 3, 1 + seed % 3, mix_seed(seed, 9)));
    const auto s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
  }
}

TEST(Subspace, AnnihilatorIsOrthogonalComplement) {
  const auto s = Subspace::span(low_rank(5, 3, 2, 3));
  const auto ann = annihilator(s);
  EXPECT_EQ(ann.dim(), 3);
  EXPECT_TRUE((s.basis().transpose() * ann.basis()).isZero());
  EXPECT_EQ(annihilator(Subspace(4)).dim(), 4);
  EXPECT_EQ(annihilator(Subspace::full(4)).dim(), 0);
}

TEST(Subspace, SpanDropsDependentColumns) {
  const auto s = Subspace::span(mat({{1, 2, 0}, {1, 2, 1}}));
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s.ambient_dim(), 2);
  EXPECT_THROW(s.contains(RationalMatrix::Zero(3, 1)), std::invalid_argument);
}

TEST(Inverse, RoundTripAndSingular) {
  const auto m = mat({{2, 1}, {5, 3}});
  EXPECT_EQ(inverse(m) * m, RationalMatrix(RationalMatrix::Identity(2, 2)));
  EXPECT_THROW(inverse(mat({{1, 2}, {2, 4}})), std::invalid_argument);
  EXPECT_THROW(inverse(mat({{1, 2, 3}})), std::invalid_argument);
}

TEST(RandomMatrix, Deterministic) {
  EXPECT_EQ(random_matrix(2, 2, 7, 10), random_matrix(2, 2, 7, 10));
  EXPECT_NE(random_matrix(4, 4, 7, 10), random_matrix(4, 4, 8, 10));
}

TEST(RandomMatrix, HeightBound) {
  EXPECT_TRUE(random_matrix(1, 1, 0, 0).isZero());
  const auto m = random_matrix(8, 8, 3, 10);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) EXPECT_LE(abs(m(i, j)), Rational(10));
  EXPECT_THROW(random_matrix(1, 1, 0, -1), std::invalid_argument);
}

TEST(RandomMatrix, GenericRankWithRetries) {
  int full = 0;
  for (std::uint64_t attempt = 0; attempt < 3 && full == 0; ++attempt)
    full += rank(random_matrix(3, 3, mix_seed(1, attempt), 10)) == 3;
  EXPECT_EQ(full, 1);
}

TEST(MixSeed, SpreadsNearbySeeds) {
  EXPECT_NE(mix_seed(0, 0), mix_seed(0, 1));
  EXPECT_NE(mix_seed(0, 1), mix_seed(1, 0));
  EXPECT_EQ(mix_seed(5, 6), mix_seed(5, 6));
}
