#include "starramsey/recipe.hpp"

#include <sstream>

namespace starramsey {

std::string_view to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::LemmaA: return "lemma-a";
    case RecipeKind::LemmaB: return "lemma-b";
    case RecipeKind::PartitionedFactorization: return "partitioned-factorization";
    case RecipeKind::Lemma13: return "lemma-13";
    case RecipeKind::TrivialCycle: return "trivial-cycle";
  }
  return "unknown";
}

std::string WitnessRecipe::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " order=" << order << " t=" << colors;
  switch (kind) {
    case RecipeKind::LemmaA: os << " q=" << q; break;
    case RecipeKind::LemmaB:
      os << " q=" << q << " r=" << r;
      if (fallback_used) {
        os << " offsets=";
        for (std::size_t i = 0; i < lemma_b_offsets.size(); ++i)
          os << (i ? "," : "") << lemma_b_offsets[i];
      }
      break;
    case RecipeKind::PartitionedFactorization:
      os << " classes=";
      for (std::size_t i = 0; i < class_sizes.size(); ++i)
        os << (i ? "," : "") << class_sizes[i];
      break;
    case RecipeKind::Lemma13: os << " n=" << n; break;
    case RecipeKind::TrivialCycle: break;
  }
  return os.str();
}

std::optional<WitnessRecipe> plan_witness(int order, int n, int t, int s) {
  WitnessRecipe recipe;
  recipe.order = order;
  recipe.colors = t;

  if (order - 1 < n) {
    recipe.kind = RecipeKind::TrivialCycle;
    return recipe;
  }
  if (t == 3 && s == 1 && order == 3 * n - 2) {
    recipe.kind = RecipeKind::Lemma13;
    recipe.n = n;
    return recipe;
  }
  if (order % 2 == 0) {
    // Balanced split of the order-1 perfect matchings: smaller classes first.
    const int q = (order - 1) / t;
    const int rem = (order - 1) % t;
    recipe.kind = RecipeKind::PartitionedFactorization;
    recipe.q = q;
    recipe.r = rem;
    recipe.class_sizes.assign(static_cast<std::size_t>(t - rem), q);
    recipe.class_sizes.insert(recipe.class_sizes.end(), static_cast<std::size_t>(rem), q + 1);
    return recipe;
  }
  // Odd order = tq + r with r in 1..t.
  const int r = (order - 1) % t + 1;
  const int q = (order - r) / t;
  if (r == 1 && q >= 2 && q % 2 == 0) {
    recipe.kind = RecipeKind::LemmaA;
    recipe.q = q;
    return recipe;
  }
  if (r >= 2 && r <= t - 1 && q >= 1) {
    recipe.kind = RecipeKind::LemmaB;
    recipe.q = q;
    recipe.r = r;
    return recipe;
  }
  return std::nullopt;
}

} // namespace starramsey
