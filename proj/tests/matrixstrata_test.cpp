#include "kcycle/matrixstrata.hpp"

#include <gtest/gtest.h>

using namespace kcycle;

namespace {

RationalMatrix diag(std::initializer_list<long> entries) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Index>(entries.size()),
                                          static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

std::vector<int> ranks(Flavor flavor, int m) {
  std::vector<int> out;
  for (int r = 0; r <= m; r += flavor == Flavor::Skew ? 2 : 1) out.push_back(r);
  return out;
}

}  // namespace

TEST(CcTable, Examples) {
  const auto a = cc_table(Flavor::Symmetric, 3, 2);
  EXPECT_EQ(a.terms, (std::map<StratumId, int>{{{Flavor::Symmetric, 3, 2}, 1},
                                               {{Flavor::Symmetric, 3, 1}, 1}}));
  const auto b = cc_table(Flavor::Symmetric, 3, 0);
  EXPECT_EQ(b.terms.size(), 1u);
  const auto c = cc_table(Flavor::Skew, 4, 2);
  ASSERT_EQ(c.terms.size(), 1u);
  EXPECT_EQ(c.terms.begin()->first.label(), "O1");
}

TEST(CcTable, ReducibleExactlyForOddCorankSymmetric) {
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Skew})
    for (int m = 1; m <= 8; ++m)
      for (int r : ranks(flavor, m)) {
        const auto cc = cc_table(flavor, m, r);
        EXPECT_EQ(cc.terms.at(cc.target), 1);
        const bool reducible = flavor == Flavor::Symmetric && (m - r) % 2 == 1 && r >= 1;
        ASSERT_EQ(cc.terms.size(), reducible ? 2u : 1u) << m << " " << r;
        if (reducible) EXPECT_EQ(cc.terms.count(StratumId{flavor, m, r - 1}), 1u);
      }
  EXPECT_THROW(cc_table(Flavor::Skew, 4, 1), std::invalid_argument);
  EXPECT_THROW(cc_table(Flavor::Symmetric, 3, 4), std::invalid_argument);
}

TEST(FlavorCoords, RoundTripAndDimension) {
  EXPECT_EQ(flavor_dim(Flavor::Symmetric, 4), 10);
  EXPECT_EQ(flavor_dim(Flavor::Skew, 4), 6);
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Skew}) {
    const auto x = random_flavor_matrix(flavor, 4, 4, 3);
    EXPECT_TRUE(has_flavor(x, flavor));
    EXPECT_EQ(from_flavor_coords(flavor, 4, to_flavor_coords(flavor, x)), x);
  }
  EXPECT_THROW(from_flavor_coords(Flavor::Skew, 4, RationalVector::Zero(5)),
               std::invalid_argument);
}

TEST(ConormalCondition, Examples) {
  EXPECT_TRUE(conormal_condition(diag({1, 0}), diag({0, 1})));
  EXPECT_FALSE(conormal_condition(diag({1, 0}), diag({1, 0})));
  EXPECT_THROW(conormal_condition(diag({1, 0}), diag({1, 0, 0})), std::invalid_argument);
  RationalMatrix skew = RationalMatrix::Zero(2, 2);
  skew(0, 1) = 1;
  skew(1, 0) = -1;
  EXPECT_THROW(conormal_condition(diag({1, 0}), skew), std::invalid_argument);
}

TEST(ConormalSolutions, DimensionsByCorank) {
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Skew})
    for (int m = 1; m <= 5; ++m)
      for (int r : ranks(flavor, m)) {
        const auto x = random_flavor_matrix(flavor, m, r, mix_seed(7, m * 8 + r));
        const int c = m - r;
        const int expected = flavor == Flavor::Symmetric ? c * (c + 1) / 2 : c * (c - 1) / 2;
        const auto solutions = conormal_solutions(x, flavor);
        EXPECT_EQ(solutions.dim(), expected);
        EXPECT_EQ(tangent_space_at(x, flavor).dim() + solutions.dim(), flavor_dim(flavor, m));
        for (Index j = 0; j < solutions.dim(); ++j)
          EXPECT_TRUE(conormal_condition(x, from_flavor_coords(flavor, m, solutions.basis().col(j))));
      }
}

TEST(TangentSpace, Examples) {
  EXPECT_EQ(tangent_space_at(RationalMatrix::Zero(3, 3), Flavor::Symmetric).dim(), 0);
  EXPECT_EQ(tangent_space_at(RationalMatrix::Identity(2, 2), Flavor::Symmetric).dim(), 3);
  EXPECT_EQ(tangent_space_at(random_flavor_matrix(Flavor::Skew, 4, 2, 1), Flavor::Skew).dim(), 5);
  EXPECT_THROW(tangent_space_at(random_matrix(3, 3, 1, 5), Flavor::Symmetric),
               std::invalid_argument);
}

TEST(TangentSpace, PerpendicularToConormalSolutions) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int m = 2 + static_cast<int>(seed % 4);
    const int r = static_cast<int>(mix_seed(seed, 3) % (m + 1));
    const auto x = random_flavor_matrix(Flavor::Symmetric, m, r, seed);
    const auto solutions = conormal_solutions(x, Flavor::Symmetric);
    for (Index j = 0; j < solutions.dim(); ++j) {
      const auto c = from_flavor_coords(Flavor::Symmetric, m, solutions.basis().col(j));
      const auto y = random_matrix(m, m, mix_seed(seed, j), 9);
      EXPECT_EQ(trace_pairing(c, RationalMatrix(y * x + x * y.transpose())), 0);
    }
  }
}

TEST(RandomFlavorMatrix, RankFlavorDeterminism) {
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Skew})
    for (int m = 1; m <= 6; ++m)
      for (int r : ranks(flavor, m)) {
        const auto x = random_flavor_matrix(flavor, m, r, 99);
        EXPECT_TRUE(has_flavor(x, flavor));
        EXPECT_EQ(rank(x), r);
        EXPECT_EQ(x, random_flavor_matrix(flavor, m, r, 99));
      }
  EXPECT_THROW(random_flavor_matrix(Flavor::Skew, 3, 1, 0), std::invalid_argument);
  EXPECT_THROW(random_flavor_matrix(Flavor::Symmetric, 3, 1, 0, 0), std::invalid_argument);
}

TEST(TracePairing, MatchesDefinition) {
  const auto a = random_matrix(3, 3, 1, 5), b = random_matrix(3, 3, 2, 5);
  EXPECT_EQ(trace_pairing(a, b), RationalMatrix(a * b.transpose()).trace());
}
