#pragma once

#include "starramsey/core.hpp"

#include <random>
#include <set>
#include <utility>
#include <vector>

namespace starramsey::testing {

inline std::pair<int, int> ends(const Edge& e) { return {e.u.index, e.v.index}; }

inline EdgeColoring random_test_coloring(int p, int t, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, t);
  std::vector<int> colors(static_cast<std::size_t>(edge_count(p)));
  for (int& c : colors)
    c = pick(rng);
  return EdgeColoring(p, t, std::move(colors));
}

/// Relabels vertices by `perm` (perm[v-1] is the new label of v) and colors
/// by `cperm` (same convention).
inline EdgeColoring relabel(const EdgeColoring& c, const std::vector<int>& perm,
                            const std::vector<int>& cperm) {
  ColoringBuilder b(c.order(), c.colors());
  for (const Edge& e : complete_graph_edges(c.order()))
    b.set(Edge::between(perm[e.u.index - 1], perm[e.v.index - 1]), cperm[c.color(e) - 1]);
  return std::move(b).build();
}

/// Independent per-vertex, per-color counts straight from the edge list.
inline std::vector<std::vector<int>> count_rows(const EdgeColoring& c) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(c.order()),
                                     std::vector<int>(static_cast<std::size_t>(c.colors()), 0));
  for (int u = 1; u <= c.order(); ++u)
    for (int v = 1; v <= c.order(); ++v)
      if (u != v)
        ++rows[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(c.color(u, v) - 1)];
  return rows;
}

} // namespace starramsey::testing
