#include "starramsey/constructions.hpp"
#include "starramsey/errors.hpp"
#include "starramsey/verify.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace starramsey;
using starramsey::testing::count_rows;

namespace {

void expect_rows_equal(const EdgeColoring& c, const std::vector<int>& expected) {
  for (const auto& row : count_rows(c))
    EXPECT_EQ(row, expected);
}

void expect_rows_at_least(const EdgeColoring& c, int q) {
  for (const auto& row : count_rows(c))
    for (int count : row)
      EXPECT_GE(count, q);
}

} // namespace

TEST(LemmaA, Examples) {
  const auto k5 = lemma_a_coloring(2, 2);
  EXPECT_EQ(k5.order(), 5);
  expect_rows_equal(k5, {2, 2});

  const auto k7 = lemma_a_coloring(3, 2);
  EXPECT_EQ(k7.order(), 7);
  expect_rows_equal(k7, {2, 2, 2});
}

TEST(LemmaA, RejectsOddOrSmallQ) {
  EXPECT_THROW(lemma_a_coloring(2, 3), InvalidParameter);
  EXPECT_THROW(lemma_a_coloring(2, 0), InvalidParameter);
  EXPECT_THROW(lemma_a_coloring(1, 2), InvalidParameter);
}

TEST(LemmaA, ExactlyQOfEveryColor) {
  for (int t = 2; t <= 6; ++t)
    for (int q : {2, 4}) {
      SCOPED_TRACE("t=" + std::to_string(t) + " q=" + std::to_string(q));
      const auto c = lemma_a_coloring(t, q);
      EXPECT_EQ(c.order(), t * q + 1);
      expect_rows_equal(c, std::vector<int>(static_cast<std::size_t>(t), q));
    }
}

TEST(LemmaB, Examples) {
  const auto k5 = lemma_b_coloring(3, 1, 2);
  EXPECT_EQ(k5.order(), 5);
  expect_rows_at_least(k5, 1);

  const auto k11 = lemma_b_coloring(4, 2, 3);
  EXPECT_EQ(k11.order(), 11);
  expect_rows_at_least(k11, 2);
}

TEST(LemmaB, RejectsBadParameters) {
  EXPECT_THROW(lemma_b_coloring(3, 1, 3), InvalidParameter); // x = 6 even, r = t
  EXPECT_THROW(lemma_b_coloring(4, 1, 1), InvalidParameter); // r < 2
  EXPECT_THROW(lemma_b_coloring(5, 2, 2), InvalidParameter); // x = 12 even
  EXPECT_THROW(lemma_b_coloring(3, 0, 2), InvalidParameter);
}

TEST(LemmaB, AtLeastQOfEveryColorUpTo41Vertices) {
  int built = 0;
  for (int t = 3; t <= 40; ++t)
    for (int q = 1; t * q + 2 <= 41; ++q)
      for (int r = 2; r <= t - 1 && t * q + r <= 41; ++r) {
        if ((t * q + r) % 2 == 0)
          continue;
        SCOPED_TRACE("t=" + std::to_string(t) + " q=" + std::to_string(q) + " r=" + std::to_string(r));
        const auto result = lemma_b_coloring_detailed(t, q, r);
        EXPECT_EQ(result.coloring.order(), t * q + r);
        expect_rows_at_least(result.coloring, q);
        // The default cyclic completion has sufficed everywhere in this range.
        EXPECT_FALSE(result.fallback_used);
        ++built;
      }
  EXPECT_GT(built, 100);
}

TEST(PartitionedFactorization, Examples) {
  expect_rows_equal(partitioned_factorization_coloring(6, std::vector<int>{2, 3}), {2, 3});
  expect_rows_equal(partitioned_factorization_coloring(4, std::vector<int>{1, 1, 1}), {1, 1, 1});
  EXPECT_THROW(partitioned_factorization_coloring(6, std::vector<int>{2, 2}), InvalidParameter);
  EXPECT_THROW(partitioned_factorization_coloring(5, std::vector<int>{2, 2}), InvalidParameter);
}

TEST(PartitionedFactorization, ZeroSizedClassesAllowed) {
  const auto c = partitioned_factorization_coloring(4, std::vector<int>{0, 3, 0});
  expect_rows_equal(c, {0, 3, 0});
}

TEST(PartitionedFactorization, RowsEqualRandomClassSizes) {
  std::mt19937 rng(2024);
  for (int p = 2; p <= 40; p += 2)
    for (int trial = 0; trial < 5; ++trial) {
      const int t = 1 + static_cast<int>(rng() % 6);
      std::vector<int> sizes(static_cast<std::size_t>(t), 0);
      for (int k = 0; k < p - 1; ++k)
        ++sizes[rng() % static_cast<unsigned>(t)];
      SCOPED_TRACE("p=" + std::to_string(p));
      expect_rows_equal(partitioned_factorization_coloring(p, sizes), sizes);
    }
}

TEST(Lemma13, Examples) {
  const auto k4 = lemma_13_coloring(2);
  EXPECT_EQ(k4.order(), 4);
  expect_rows_equal(k4, {1, 1, 1});
  const auto k7 = lemma_13_coloring(3);
  EXPECT_EQ(k7.order(), 7);
  expect_rows_equal(k7, {2, 2, 2});
  const auto k10 = lemma_13_coloring(4);
  EXPECT_EQ(k10.order(), 10);
  expect_rows_equal(k10, {3, 3, 3});
  EXPECT_THROW(lemma_13_coloring(1), InvalidParameter);
}

TEST(Lemma13, ExactBalanceUpToN15) {
  for (int n = 2; n <= 15; ++n) {
    SCOPED_TRACE("n=" + std::to_string(n));
    expect_rows_equal(lemma_13_coloring(n), {n - 1, n - 1, n - 1});
  }
}

TEST(Lemma13, OddOrderColorFollowsCircularHalfDistance) {
  // Edge {a, b} of odd K_x is edge k of the matching centred between them,
  // where b - a = +-2k (mod x); its color is ((k-1) mod 3) + 1.
  for (int n = 3; n <= 15; n += 2) {
    const int x = 3 * n - 2;
    const auto c = lemma_13_coloring(n);
    for (const auto& e : complete_graph_edges(x)) {
      const int diff = e.v.index - e.u.index;
      int k = 0;
      for (int cand = 1; cand <= (x - 1) / 2; ++cand)
        if ((diff - 2 * cand) % x == 0 || (diff + 2 * cand) % x == 0)
          k = cand;
      ASSERT_NE(k, 0);
      EXPECT_EQ(c.color(e), (k - 1) % 3 + 1) << "x=" << x;
    }
  }
}

TEST(TrivialCycle, AlwaysValid) {
  for (int p = 1; p <= 12; ++p)
    for (int t = 1; t <= 4; ++t) {
      const auto c = trivial_cycle_coloring(p, t);
      EXPECT_EQ(c.order(), p);
    }
}

TEST(WitnessColoring, Examples) {
  const auto w1 = witness_coloring(3, 3, 1);
  EXPECT_EQ(w1.coloring.order(), 7);
  EXPECT_EQ(w1.recipe.kind, RecipeKind::Lemma13);
  EXPECT_GE(min_star_colors(w1.coloring, 3).value(), 2);

  const auto w2 = witness_coloring(5, 4, 2);
  EXPECT_EQ(w2.coloring.order(), 9);
  EXPECT_EQ(w2.recipe.kind, RecipeKind::LemmaA);
  EXPECT_EQ(w2.recipe.q, 2);
  EXPECT_GE(min_star_colors(w2.coloring, 5).value(), 3);

  const auto w3 = witness_coloring(4, 2, 1);
  EXPECT_EQ(w3.coloring.order(), 6);
  EXPECT_EQ(w3.recipe.kind, RecipeKind::PartitionedFactorization);
  EXPECT_EQ(w3.recipe.class_sizes, (std::vector<int>{2, 3}));
  EXPECT_EQ(min_star_colors(w3.coloring, 4).value(), 2);
}

TEST(WitnessColoring, SingleLeafGivesEmptyGraph) {
  const auto w = witness_coloring(1, 4, 3);
  EXPECT_EQ(w.coloring.order(), 1);
  EXPECT_EQ(w.recipe.kind, RecipeKind::TrivialCycle);
}

TEST(WitnessColoring, UnsupportedQuery) {
  EXPECT_THROW(witness_coloring(3, 4, 1), UnsupportedParameters);
}

TEST(WitnessColoring, RefusesUncertifiableOrder) {
  // (n=9, t=5, s=3) is classified as x-2 = 15, but any 5-coloring of K_14 has
  // a vertex whose three largest color classes cover 9 edges.
  EXPECT_FALSE(certificate_possible(14, 9, 5, 3));
  EXPECT_THROW(witness_coloring(9, 5, 3), ConstructionFailed);
}
