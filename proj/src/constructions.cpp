#include "starramsey/constructions.hpp"

#include "starramsey/errors.hpp"
#include "starramsey/formulas.hpp"
#include "starramsey/verify.hpp"

#include <numeric>
#include <sstream>
#include <string>

namespace starramsey {

namespace {

std::string row_string(std::span<const int> row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i)
    s += (i ? "," : "") + std::to_string(row[i]);
  return s + ")";
}

// Throws unless every row equals `expected` (or dominates it when !exact).
void require_rows(const EdgeColoring& c, std::span<const int> expected, bool exact,
                  const char* builder) {
  const ColorDegreeProfile profile(c);
  for (int v = 1; v <= c.order(); ++v) {
    const auto row = profile.row(VertexId{v});
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool ok = exact ? row[j] == expected[j] : row[j] >= expected[j];
      if (!ok)
        throw ConstructionFailed(std::string(builder) + ": vertex " + std::to_string(v) +
                                 " has color degrees " + row_string(row) +
                                 (exact ? ", expected " : ", expected at least ") +
                                 row_string(expected));
    }
  }
}

// Lemma A circle layout: class T_i member j. Positions of (i, j) and
// (q+1-i, j) sum to x, so their edge is in M_{v_x}.
int lemma_a_position(int i, int j, int t, int q, int x) {
  return i <= q / 2 ? (i - 1) * t + j : x - ((q - i) * t + j);
}

EdgeColoring lemma_b_attempt(int t, int q, int r, std::span<const int> offsets) {
  const int x = t * q + r;
  const auto matchings = near_one_factorization(x);
  ColoringBuilder builder(x, t);

  // Singletons v_1..v_r sit at positions 1..r; T_i member j follows them.
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= t; ++j)
      builder.color_matching(matchings[static_cast<std::size_t>(r + (i - 1) * t + j - 1)].edges, j);

  const auto& last = matchings[static_cast<std::size_t>(r - 1)].edges;
  for (std::size_t k = 0; k < last.size(); ++k)
    builder.set(last[k], static_cast<int>(k % t) + 1);
  const auto& first = matchings[0].edges;
  for (std::size_t k = 0; k < first.size(); ++k)
    builder.set(first[k], t - static_cast<int>(k % t));

  for (int m = 2; m <= r - 1; ++m) {
    const auto& edges = matchings[static_cast<std::size_t>(m - 1)].edges;
    const int shift = offsets[static_cast<std::size_t>(m - 2)];
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const int k1 = static_cast<int>(k) + 1;
      builder.set(edges[k], (k1 + m - 1 + shift) % t + 1);
    }
  }
  return std::move(builder).build();
}

bool rows_at_least(const EdgeColoring& c, int q) {
  const ColorDegreeProfile profile(c);
  for (int v = 1; v <= c.order(); ++v)
    for (int count : profile.row(VertexId{v}))
      if (count < q)
        return false;
  return true;
}

constexpr int kMaxLemmaBAttempts = 4096;

} // namespace

EdgeColoring lemma_a_coloring(int t, int q) {
  if (t < 2)
    throw InvalidParameter("lemma A needs t >= 2, got " + std::to_string(t));
  if (q < 2 || q % 2 != 0)
    throw InvalidParameter("lemma A needs even q >= 2, got " + std::to_string(q));

  const int x = t * q + 1;
  const auto matchings = near_one_factorization(x);
  ColoringBuilder builder(x, t);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= t; ++j) {
      const int pos = lemma_a_position(i, j, t, q, x);
      builder.color_matching(matchings[static_cast<std::size_t>(pos - 1)].edges, j);
    }
  for (int i = 1; i <= q / 2; ++i)
    for (int j = 1; j <= t; ++j) {
      const int a = lemma_a_position(i, j, t, q, x);
      const int b = lemma_a_position(q + 1 - i, j, t, q, x);
      if ((a + b) % x != 0)
        throw ConstructionFailed("lemma A layout: positions " + std::to_string(a) + " and " +
                                 std::to_string(b) + " are not mirrored");
      builder.set(Edge::between(a, b), j);
    }
  auto coloring = std::move(builder).build();

  const std::vector<int> expected(static_cast<std::size_t>(t), q);
  require_rows(coloring, expected, true, "lemma A");
  return coloring;
}

LemmaBResult lemma_b_coloring_detailed(int t, int q, int r) {
  if (t < 3)
    throw InvalidParameter("lemma B needs t >= 3, got " + std::to_string(t));
  if (q < 1)
    throw InvalidParameter("lemma B needs q >= 1, got " + std::to_string(q));
  if (r < 2 || r > t - 1)
    throw InvalidParameter("lemma B needs 2 <= r <= t-1, got r=" + std::to_string(r));
  if ((t * q + r) % 2 == 0)
    throw InvalidParameter("lemma B needs tq+r odd, got " + std::to_string(t * q + r));

  // Offsets for M_{v_2}..M_{v_{r-1}}, enumerated like an odometer in base t.
  std::vector<int> offsets(static_cast<std::size_t>(std::max(0, r - 2)), 0);
  for (int attempt = 0; attempt < kMaxLemmaBAttempts; ++attempt) {
    auto coloring = lemma_b_attempt(t, q, r, offsets);
    if (rows_at_least(coloring, q))
      return {std::move(coloring), offsets, attempt > 0};
    std::size_t k = 0;
    while (k < offsets.size() && ++offsets[k] == t)
      offsets[k++] = 0;
    if (k == offsets.size())
      break;
  }
  throw ConstructionFailed("lemma B: no completion of K_" + std::to_string(t * q + r) +
                           " reaches " + std::to_string(q) + " edges of every color");
}

EdgeColoring partitioned_factorization_coloring(int p, std::span<const int> class_sizes) {
  if (p < 2 || p % 2 != 0)
    throw InvalidParameter("partitioned factorization needs even p >= 2, got " + std::to_string(p));
  if (class_sizes.empty())
    throw InvalidParameter("partitioned factorization needs at least one color class");
  for (int size : class_sizes)
    if (size < 0)
      throw InvalidParameter("class sizes must be nonnegative");
  const int total = std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
  if (total != p - 1)
    throw InvalidParameter("class sizes sum to " + std::to_string(total) + ", expected " +
                           std::to_string(p - 1));

  const auto factors = one_factorization(p);
  ColoringBuilder builder(p, static_cast<int>(class_sizes.size()));
  std::size_t next = 0;
  for (std::size_t c = 0; c < class_sizes.size(); ++c)
    for (int k = 0; k < class_sizes[c]; ++k)
      builder.color_matching(factors[next++], static_cast<int>(c) + 1);
  auto coloring = std::move(builder).build();
  require_rows(coloring, class_sizes, true, "partitioned factorization");
  return coloring;
}

EdgeColoring lemma_13_coloring(int n) {
  if (n < 2)
    throw InvalidParameter("lemma 13 coloring needs n >= 2, got " + std::to_string(n));
  const int order = 3 * n - 2;
  const std::vector<int> expected(3, n - 1);
  if (order % 2 == 0)
    return partitioned_factorization_coloring(order, expected);

  ColoringBuilder builder(order, 3);
  for (const auto& m : near_one_factorization(order))
    for (std::size_t k = 0; k < m.edges.size(); ++k)
      builder.set(m.edges[k], static_cast<int>(k % 3) + 1);
  auto coloring = std::move(builder).build();
  require_rows(coloring, expected, true, "lemma 13");
  return coloring;
}

EdgeColoring trivial_cycle_coloring(int order, int t) {
  if (t < 1)
    throw InvalidParameter("need at least one color");
  ColoringBuilder builder(order, t);
  if (order == 2) {
    builder.set(Edge::between(1, 2), 1);
  } else if (order % 2 == 0 && order > 2) {
    const auto factors = one_factorization(order);
    for (std::size_t i = 0; i < factors.size(); ++i)
      builder.color_matching(factors[i], static_cast<int>(i % t) + 1);
  } else if (order >= 3) {
    for (const auto& m : near_one_factorization(order))
      for (std::size_t k = 0; k < m.edges.size(); ++k)
        builder.set(m.edges[k], static_cast<int>(k % t) + 1);
  }
  return std::move(builder).build();
}

EdgeColoring build_from_recipe(WitnessRecipe& recipe) {
  switch (recipe.kind) {
    case RecipeKind::LemmaA: return lemma_a_coloring(recipe.colors, recipe.q);
    case RecipeKind::LemmaB: {
      auto result = lemma_b_coloring_detailed(recipe.colors, recipe.q, recipe.r);
      recipe.lemma_b_offsets = result.offsets;
      recipe.fallback_used = result.fallback_used;
      return std::move(result.coloring);
    }
    case RecipeKind::PartitionedFactorization:
      return partitioned_factorization_coloring(recipe.order, recipe.class_sizes);
    case RecipeKind::Lemma13: return lemma_13_coloring(recipe.n);
    case RecipeKind::TrivialCycle: return trivial_cycle_coloring(recipe.order, recipe.colors);
  }
  throw ConstructionFailed("unknown recipe");
}

Witness witness_coloring(int n, int t, int s) {
  const CaseVerdict verdict = classify(n, t, s);
  const int order = static_cast<int>(verdict.value - 1);
  if (!verdict.witness) {
    std::ostringstream os;
    os << "no construction known for K_" << order << " (n=" << n << " t=" << t << " s=" << s
       << ", case " << to_string(verdict.tag) << ")";
    throw ConstructionFailed(os.str());
  }
  WitnessRecipe recipe = *verdict.witness;
  EdgeColoring coloring = build_from_recipe(recipe);
  Certificate cert = check_certificate(coloring, n, s, recipe);
  if (!cert.passed) {
    std::ostringstream os;
    os << "witness for n=" << n << " t=" << t << " s=" << s << " (case " << to_string(verdict.tag)
       << ", " << recipe.describe() << ") has an n-star with " << cert.min_colors.value_or(0)
       << " colors";
    if (!certificate_possible(order, n, t, s))
      os << "; no coloring of K_" << order << " can work: every vertex has " << s
         << " colors covering at least " << balanced_top_sum(order, t, s) << " >= n edges";
    throw ConstructionFailed(os.str());
  }
  return Witness{std::move(coloring), std::move(recipe), static_cast<int>(verdict.value)};
}

} // namespace starramsey
