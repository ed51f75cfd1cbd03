#pragma once

#include "starramsey/core.hpp"
#include "starramsey/recipe.hpp"

#include <span>
#include <vector>

namespace starramsey {

/// Coloring of K_{tq+1} with exactly q edges of every color at every vertex.
/// Requires t >= 2 and q even, q >= 2.
EdgeColoring lemma_a_coloring(int t, int q);

struct LemmaBResult {
  EdgeColoring coloring;
  std::vector<int> offsets; // shift applied to M_{v_m}, m = 2..r-1
  bool fallback_used = false;
};

/// Coloring of K_{tq+r} with at least q edges of every color at every
/// vertex. Requires tq+r odd, 2 <= r <= t-1, q >= 1.
LemmaBResult lemma_b_coloring_detailed(int t, int q, int r);
inline EdgeColoring lemma_b_coloring(int t, int q, int r) {
  return lemma_b_coloring_detailed(t, q, r).coloring;
}

/// Even K_p whose color c is the union of class_sizes[c-1] perfect matchings,
/// so every vertex has exactly class_sizes[c-1] edges of color c.
EdgeColoring partitioned_factorization_coloring(int p, std::span<const int> class_sizes);

/// K_{3n-2} with exactly n-1 edges of each of 3 colors at every vertex.
EdgeColoring lemma_13_coloring(int n);

/// Any coloring of K_order, colors assigned cyclically along matchings.
EdgeColoring trivial_cycle_coloring(int order, int t);

EdgeColoring build_from_recipe(WitnessRecipe& recipe);

struct Witness {
  EdgeColoring coloring;
  WitnessRecipe recipe;
  int ramsey_value = 0; // the classifier's R; coloring has order R-1
};

/// Lower-bound certificate for R_{s,t}(K_{1,n}), s in {t-1, t-2}: a coloring
/// of K_{R-1} in which every n-star shows at least s+1 colors. Verified
/// before it is returned; throws ConstructionFailed otherwise.
Witness witness_coloring(int n, int t, int s);

} // namespace starramsey
