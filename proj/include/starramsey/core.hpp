#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace starramsey {

/// 1-based vertex label, v_1 .. v_p.
struct VertexId {
  int index = 1;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  /// Canonicalizes the endpoint order. Throws InvalidParameter on a loop.
  static Edge between(VertexId a, VertexId b);
  static Edge between(int a, int b) { return between(VertexId{a}, VertexId{b}); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr std::int64_t edge_count(std::int64_t order) { return order * (order - 1) / 2; }

/// Position of `e` in the lexicographic (u, v) order of E(K_order).
std::size_t edge_index(int order, Edge e);

/// All edges of K_order in lexicographic order.
std::vector<Edge> complete_graph_edges(int order);

/// Near-perfect matching M_{v_center} of an odd complete graph, edges in
/// their canonical order: edge k joins the vertices k steps either side of
/// the center on the circle 1..x.
struct OrderedMatching {
  VertexId center;
  std::vector<Edge> edges;
};

using PerfectMatching = std::vector<Edge>;

/// The x near-matchings M_{v_1} .. M_{v_x} of K_x, x odd and >= 3.
std::vector<OrderedMatching> near_one_factorization(int x);

/// p-1 perfect matchings of K_p, p even and >= 2 (circle method).
std::vector<PerfectMatching> one_factorization(int p);

/// A total assignment of colors 1..t to the edges of K_p.
class EdgeColoring {
public:
  /// `edge_colors` is indexed by `edge_index`. Throws InvalidParameter on a
  /// size mismatch or a color outside 1..colors.
  EdgeColoring(int order, int colors, std::vector<int> edge_colors);

  /// Every edge gets `color`.
  static EdgeColoring monochromatic(int order, int colors, int color = 1);

  int order() const { return order_; }
  int colors() const { return colors_; }

  int color(Edge e) const { return edge_colors_[edge_index(order_, e)]; }
  int color(int u, int v) const { return color(Edge::between(u, v)); }

  std::span<const int> edge_colors() const { return edge_colors_; }

  EdgeColoring with_color(Edge e, int color) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
  int order_;
  int colors_;
  std::vector<int> edge_colors_;
};

/// Partial coloring under construction. `build` refuses gaps.
class ColoringBuilder {
public:
  ColoringBuilder(int order, int colors);

  void set(Edge e, int color);
  void color_matching(std::span<const Edge> edges, int color);
  bool is_set(Edge e) const { return edge_colors_[edge_index(order_, e)] != 0; }

  /// Throws ConstructionFailed if any edge is still uncolored.
  EdgeColoring build() &&;

private:
  int order_;
  int colors_;
  std::vector<int> edge_colors_;
};

/// Per-vertex, per-color edge counts.
class ColorDegreeProfile {
public:
  explicit ColorDegreeProfile(const EdgeColoring& coloring);

  int order() const { return order_; }
  int colors() const { return colors_; }

  std::span<const int> row(VertexId v) const {
    return {counts_.data() + static_cast<std::size_t>(v.index - 1) * colors_,
            static_cast<std::size_t>(colors_)};
  }
  int count(VertexId v, int color) const { return row(v)[color - 1]; }

private:
  int order_;
  int colors_;
  std::vector<int> counts_;
};

inline ColorDegreeProfile color_degree_profile(const EdgeColoring& c) {
  return ColorDegreeProfile{c};
}

} // namespace starramsey
