#include "starramsey/core.hpp"

#include "starramsey/errors.hpp"

#include <string>
#include <utility>

namespace starramsey {

namespace {

// Circle position in 1..x for any integer offset.
int wrap(int position, int x) {
  const int m = ((position % x) + x) % x;
  return m == 0 ? x : m;
}

void check_order(int order) {
  if (order < 1)
    throw InvalidParameter("graph order must be >= 1, got " + std::to_string(order));
}

} // namespace

Edge Edge::between(VertexId a, VertexId b) {
  if (a == b)
    throw InvalidParameter("edge endpoints must differ (vertex " + std::to_string(a.index) + ")");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::size_t edge_index(int order, Edge e) {
  const std::int64_t u = e.u.index;
  const std::int64_t v = e.v.index;
  return static_cast<std::size_t>((u - 1) * order - (u - 1) * u / 2 + (v - u - 1));
}

std::vector<Edge> complete_graph_edges(int order) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count(order)));
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v)
      edges.push_back(Edge{VertexId{u}, VertexId{v}});
  return edges;
}

std::vector<OrderedMatching> near_one_factorization(int x) {
  if (x < 3 || x % 2 == 0)
    throw InvalidParameter("near-1-factorization needs odd x >= 3, got " + std::to_string(x));
  std::vector<OrderedMatching> matchings;
  matchings.reserve(static_cast<std::size_t>(x));
  for (int i = 1; i <= x; ++i) {
    OrderedMatching m{VertexId{i}, {}};
    m.edges.reserve(static_cast<std::size_t>((x - 1) / 2));
    for (int k = 1; k <= (x - 1) / 2; ++k)
      m.edges.push_back(Edge::between(wrap(i + k, x), wrap(i - k, x)));
    matchings.push_back(std::move(m));
  }
  return matchings;
}

std::vector<PerfectMatching> one_factorization(int p) {
  if (p < 2 || p % 2 != 0)
    throw InvalidParameter("1-factorization needs even p >= 2, got " + std::to_string(p));
  if (p == 2)
    return {PerfectMatching{Edge::between(1, 2)}};
  std::vector<PerfectMatching> factors;
  factors.reserve(static_cast<std::size_t>(p - 1));
  for (auto& near : near_one_factorization(p - 1)) {
    PerfectMatching m = std::move(near.edges);
    m.push_back(Edge::between(near.center, VertexId{p}));
    factors.push_back(std::move(m));
  }
  return factors;
}

EdgeColoring::EdgeColoring(int order, int colors, std::vector<int> edge_colors)
    : order_(order), colors_(colors), edge_colors_(std::move(edge_colors)) {
  check_order(order);
  if (colors < 1)
    throw InvalidParameter("color count must be >= 1, got " + std::to_string(colors));
  if (static_cast<std::int64_t>(edge_colors_.size()) != edge_count(order))
    throw InvalidParameter("expected " + std::to_string(edge_count(order)) + " edge colors, got " +
                           std::to_string(edge_colors_.size()));
  for (int c : edge_colors_)
    if (c < 1 || c > colors)
      throw InvalidParameter("color " + std::to_string(c) + " outside 1.." + std::to_string(colors));
}

EdgeColoring EdgeColoring::monochromatic(int order, int colors, int color) {
  return EdgeColoring(order, colors,
                      std::vector<int>(static_cast<std::size_t>(edge_count(order)), color));
}

EdgeColoring EdgeColoring::with_color(Edge e, int color) const {
  auto copy = edge_colors_;
  copy[edge_index(order_, e)] = color;
  return EdgeColoring(order_, colors_, std::move(copy));
}

ColoringBuilder::ColoringBuilder(int order, int colors)
    : order_(order), colors_(colors),
      edge_colors_(static_cast<std::size_t>(edge_count(order)), 0) {
  check_order(order);
}

void ColoringBuilder::set(Edge e, int color) {
  if (color < 1 || color > colors_)
    throw InvalidParameter("color " + std::to_string(color) + " outside 1.." + std::to_string(colors_));
  edge_colors_[edge_index(order_, e)] = color;
}

void ColoringBuilder::color_matching(std::span<const Edge> edges, int color) {
  for (const Edge& e : edges)
    set(e, color);
}

EdgeColoring ColoringBuilder::build() && {
  for (std::size_t i = 0; i < edge_colors_.size(); ++i)
    if (edge_colors_[i] == 0)
      throw ConstructionFailed("edge #" + std::to_string(i) + " of K_" + std::to_string(order_) +
                               " left uncolored");
  return EdgeColoring(order_, colors_, std::move(edge_colors_));
}

ColorDegreeProfile::ColorDegreeProfile(const EdgeColoring& coloring)
    : order_(coloring.order()), colors_(coloring.colors()),
      counts_(static_cast<std::size_t>(order_) * colors_, 0) {
  const auto colors = coloring.edge_colors();
  std::size_t i = 0;
  for (int u = 1; u <= order_; ++u) {
    for (int v = u + 1; v <= order_; ++v, ++i) {
      const int c = colors[i] - 1;
      ++counts_[static_cast<std::size_t>(u - 1) * colors_ + c];
      ++counts_[static_cast<std::size_t>(v - 1) * colors_ + c];
    }
  }
}

} // namespace starramsey
