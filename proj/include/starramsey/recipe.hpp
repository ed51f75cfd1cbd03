#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starramsey {

/// Which construction a certificate coloring came from.
enum class RecipeKind {
  LemmaA,                   // odd K_{tq+1}, q even: exactly q edges of each color per vertex
  LemmaB,                   // odd K_{tq+r}, 2 <= r <= t-1: at least q of each color
  PartitionedFactorization, // even K_p: 1-factors grouped into color classes
  Lemma13,                  // K_{3n-2}, 3 colors, n-1 of each
  TrivialCycle,             // no n-star exists, any coloring will do
};

std::string_view to_string(RecipeKind kind);

struct WitnessRecipe {
  RecipeKind kind = RecipeKind::TrivialCycle;
  int order = 0;
  int colors = 0;
  int q = 0;
  int r = 0;
  int n = 0;                         // Lemma13 only
  std::vector<int> class_sizes;      // PartitionedFactorization only
  std::vector<int> lemma_b_offsets;  // extra cyclic shifts for M_{v_2}..M_{v_{r-1}}
  bool fallback_used = false;        // Lemma B needed a nonzero offset

  /// One-line human/machine readable form, e.g. "lemma-a t=4 q=2".
  std::string describe() const;
};

/// Picks the construction that should witness R_{s,t}(K_{1,n}) > order.
/// Returns nullopt when none of the known recipes applies to this order.
std::optional<WitnessRecipe> plan_witness(int order, int n, int t, int s);

} // namespace starramsey
