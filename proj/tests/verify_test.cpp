#include "starramsey/constructions.hpp"
#include "starramsey/verify.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace starramsey;

namespace {

std::vector<ColoredEdge> edges_of(const EdgeColoring& c) {
  std::vector<ColoredEdge> out;
  for (const auto& e : complete_graph_edges(c.order()))
    out.push_back({e.u.index, e.v.index, c.color(e), 0});
  return out;
}

// Brute force: over every vertex and every set of colors, the smallest set
// that covers at least n edges at that vertex.
std::optional<int> brute_min_star_colors(const EdgeColoring& c, int n) {
  if (c.order() - 1 < n)
    return std::nullopt;
  int best = c.colors() + 1;
  for (int v = 1; v <= c.order(); ++v)
    for (unsigned mask = 1; mask < (1u << c.colors()); ++mask) {
      int covered = 0;
      for (int w = 1; w <= c.order(); ++w)
        if (w != v && (mask >> (c.color(v, w) - 1) & 1u))
          ++covered;
      if (covered >= n)
        best = std::min(best, std::popcount(mask));
    }
  return best;
}

} // namespace

TEST(Validate, AcceptsCompleteColoring) {
  EXPECT_TRUE(validate(4, 2, edges_of(EdgeColoring::monochromatic(4, 2))).empty());
}

TEST(Validate, ReportsMissingEdge) {
  auto edges = edges_of(EdgeColoring::monochromatic(4, 2));
  edges.erase(std::find_if(edges.begin(), edges.end(), [](auto& e) { return e.u == 1 && e.v == 3; }));
  const auto defects = validate(4, 2, edges);
  ASSERT_EQ(defects.size(), 1u);
  EXPECT_EQ(defects[0].kind, Defect::Kind::MissingEdge);
  EXPECT_EQ(defects[0].u, 1);
  EXPECT_EQ(defects[0].v, 3);
  EXPECT_NE(defects[0].message.find("missing edge"), std::string::npos);
}

TEST(Validate, ReportsOutOfRangeColorAndDuplicates) {
  auto edges = edges_of(EdgeColoring::monochromatic(4, 4));
  edges[2].color = 5;
  edges.push_back({1, 2, 1, 9});
  edges.push_back({3, 2, 1, 10});
  const auto defects = validate(4, 4, edges);
  ASSERT_EQ(defects.size(), 3u);
  EXPECT_EQ(defects[0].kind, Defect::Kind::ColorOutOfRange);
  EXPECT_NE(defects[0].message.find("color out of range"), std::string::npos);
  EXPECT_EQ(defects[1].kind, Defect::Kind::DuplicateEdge);
  EXPECT_EQ(defects[1].line, 9);
  EXPECT_EQ(defects[2].kind, Defect::Kind::InvalidEdge);
  EXPECT_THROW(assemble_coloring(4, 4, edges), InvalidColoring);
}

TEST(MinStarColors, Examples) {
  EXPECT_EQ(min_star_colors(EdgeColoring::monochromatic(5, 2), 3), 1);
  const auto proper = partitioned_factorization_coloring(4, std::vector<int>{1, 1, 1});
  EXPECT_EQ(min_star_colors(proper, 3), 3);
  EXPECT_EQ(min_star_colors(lemma_a_coloring(2, 2), 3), 2);
  EXPECT_EQ(min_star_colors(EdgeColoring::monochromatic(3, 2), 3), std::nullopt);
}

TEST(MinStarColors, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 5);
    const int t = 1 + static_cast<int>(rng() % 5);
    const auto c = starramsey::testing::random_test_coloring(p, t, rng);
    for (int n = 1; n <= p; ++n)
      EXPECT_EQ(min_star_colors(c, n), brute_min_star_colors(c, n));
  }
}

TEST(MinStarColors, MonotoneInNAndBoundedByNAndT) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 14);
    const int t = 1 + static_cast<int>(rng() % 6);
    const auto c = starramsey::testing::random_test_coloring(p, t, rng);
    int previous = 0;
    for (int n = 1; n <= p - 1; ++n) {
      const int k = min_star_colors(c, n).value();
      EXPECT_LE(k, std::min(n, t));
      EXPECT_GE(k, previous);
      previous = k;
    }
  }
}

TEST(MinStarColors, InvariantUnderRelabeling) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 12);
    const int t = 1 + static_cast<int>(rng() % 5);
    const auto c = starramsey::testing::random_test_coloring(p, t, rng);
    std::vector<int> perm(static_cast<std::size_t>(p)), cperm(static_cast<std::size_t>(t));
    std::iota(perm.begin(), perm.end(), 1);
    std::iota(cperm.begin(), cperm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(cperm.begin(), cperm.end(), rng);
    const auto identity = [](int k) {
      std::vector<int> v(static_cast<std::size_t>(k));
      std::iota(v.begin(), v.end(), 1);
      return v;
    };
    const auto vertices_moved = starramsey::testing::relabel(c, perm, identity(t));
    const auto colors_moved = starramsey::testing::relabel(c, identity(p), cperm);
    for (int n = 1; n <= p - 1; ++n) {
      EXPECT_EQ(min_star_colors(c, n), min_star_colors(vertices_moved, n));
      EXPECT_EQ(min_star_colors(c, n), min_star_colors(colors_moved, n));
    }
  }
}

TEST(StarCover, ReportsCoveringColors) {
  const auto c = EdgeColoring::monochromatic(7, 3);
  const auto cover = smallest_star_cover(c, 3);
  ASSERT_TRUE(cover);
  EXPECT_EQ(cover->center.index, 1);
  EXPECT_EQ(cover->colors, std::vector<int>{1});
  EXPECT_EQ(cover->edges_covered, 6);
}

TEST(CheckCertificate, Examples) {
  const auto lemma13 = check_certificate(lemma_13_coloring(3), 3, 1);
  EXPECT_TRUE(lemma13.passed);
  EXPECT_EQ(lemma13.min_colors, 2);

  const auto mono = check_certificate(EdgeColoring::monochromatic(7, 3), 3, 1);
  EXPECT_FALSE(mono.passed);
  ASSERT_TRUE(mono.offending);
  EXPECT_EQ(mono.offending->colors, std::vector<int>{1});

  const auto lemma_a = check_certificate(lemma_a_coloring(4, 2), 5, 2);
  EXPECT_TRUE(lemma_a.passed);
  EXPECT_EQ(lemma_a.min_colors, 3);
}

TEST(CheckCertificate, VacuousWhenNoStar) {
  const auto cert = check_certificate(EdgeColoring::monochromatic(3, 2), 3, 1);
  EXPECT_TRUE(cert.passed);
  EXPECT_FALSE(cert.min_colors);
}

TEST(CertificatePossible, BalancedSplitBound) {
  // 13 edges over 5 colors: best split 3,3,3,2,2 puts 9 on the top three.
  EXPECT_EQ(balanced_top_sum(14, 5, 3), 9);
  EXPECT_FALSE(certificate_possible(14, 9, 5, 3));
  EXPECT_TRUE(certificate_possible(13, 9, 5, 3));
  EXPECT_TRUE(certificate_possible(3, 5, 2, 1));
}

TEST(CertificatePossible, NecessaryForEveryPassingColoring) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 10);
    const int t = 2 + static_cast<int>(rng() % 4);
    const auto c = starramsey::testing::random_test_coloring(p, t, rng);
    for (int n = 1; n <= p - 1; ++n)
      for (int s = 1; s < t; ++s)
        if (check_certificate(c, n, s).passed)
          EXPECT_TRUE(certificate_possible(p, n, t, s));
  }
}
