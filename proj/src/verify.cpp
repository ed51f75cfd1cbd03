#include "starramsey/verify.hpp"

#include <algorithm>
#include <numeric>

namespace starramsey {

namespace {

std::string edge_text(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::string summarize(const std::vector<Defect>& defects) {
  std::string msg = std::to_string(defects.size()) + " defect(s) in coloring";
  if (!defects.empty())
    msg += "; first: " + defects.front().message;
  return msg;
}

// Colors at one vertex ordered by count (descending), then by color.
std::vector<int> colors_by_count(std::span<const int> row) {
  std::vector<int> order(row.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return row[a - 1] > row[b - 1]; });
  return order;
}

} // namespace

std::vector<Defect> validate(int order, int colors, std::span<const ColoredEdge> edges) {
  std::vector<Defect> defects;
  if (order < 1) {
    defects.push_back({Defect::Kind::InvalidEdge, 0, 0, 0,
                       "graph order " + std::to_string(order) + " < 1"});
    return defects;
  }
  std::vector<int> seen(static_cast<std::size_t>(edge_count(order)), -1);
  for (const ColoredEdge& e : edges) {
    const std::string where = e.line > 0 ? " (line " + std::to_string(e.line) + ")" : "";
    if (e.u < 1 || e.v > order || e.u >= e.v) {
      defects.push_back({Defect::Kind::InvalidEdge, e.u, e.v, e.line,
                         "invalid edge " + edge_text(e.u, e.v) + where});
      continue;
    }
    if (e.color < 1 || e.color > colors)
      defects.push_back({Defect::Kind::ColorOutOfRange, e.u, e.v, e.line,
                         "color out of range: " + std::to_string(e.color) + " on " +
                             edge_text(e.u, e.v) + where});
    auto& slot = seen[edge_index(order, Edge::between(e.u, e.v))];
    if (slot >= 0)
      defects.push_back({Defect::Kind::DuplicateEdge, e.u, e.v, e.line,
                         "duplicate edge " + edge_text(e.u, e.v) + where});
    else
      slot = e.line;
  }
  std::size_t i = 0;
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v, ++i)
      if (seen[i] < 0)
        defects.push_back({Defect::Kind::MissingEdge, u, v, 0, "missing edge " + edge_text(u, v)});
  return defects;
}

InvalidColoring::InvalidColoring(std::vector<Defect> defects)
    : std::runtime_error(summarize(defects)), defects_(std::move(defects)) {}

EdgeColoring assemble_coloring(int order, int colors, std::span<const ColoredEdge> edges) {
  auto defects = validate(order, colors, edges);
  if (!defects.empty())
    throw InvalidColoring(std::move(defects));
  std::vector<int> assigned(static_cast<std::size_t>(edge_count(order)));
  for (const ColoredEdge& e : edges)
    assigned[edge_index(order, Edge::between(e.u, e.v))] = e.color;
  return EdgeColoring(order, colors, std::move(assigned));
}

std::optional<StarCover> smallest_star_cover(const EdgeColoring& coloring, int n) {
  if (coloring.order() - 1 < n || n < 1)
    return std::nullopt;
  const ColorDegreeProfile profile(coloring);
  std::optional<StarCover> best;
  int best_k = coloring.colors() + 1;
  for (int v = 1; v <= coloring.order(); ++v) {
    const auto row = profile.row(VertexId{v});
    const auto ranked = colors_by_count(row);
    int covered = 0;
    for (int k = 0; k < static_cast<int>(ranked.size()); ++k) {
      covered += row[ranked[k] - 1];
      if (covered >= n) {
        if (k + 1 < best_k) {
          best_k = k + 1;
          best = StarCover{VertexId{v}, {ranked.begin(), ranked.begin() + k + 1}, covered};
        }
        break;
      }
    }
  }
  return best;
}

std::optional<int> min_star_colors(const EdgeColoring& coloring, int n) {
  const auto cover = smallest_star_cover(coloring, n);
  if (!cover)
    return std::nullopt;
  return static_cast<int>(cover->colors.size());
}

bool has_star_within(const EdgeColoring& coloring, int n, int s) {
  const auto k = min_star_colors(coloring, n);
  return k && *k <= s;
}

int balanced_top_sum(int order, int t, int s) {
  const int q = (order - 1) / t;
  const int r = (order - 1) % t;
  return s * q + std::min(r, s);
}

bool certificate_possible(int order, int n, int t, int s) {
  if (order - 1 < n)
    return true;
  return balanced_top_sum(order, t, s) <= n - 1;
}

Certificate check_certificate(EdgeColoring coloring, int n, int s,
                              std::optional<WitnessRecipe> recipe) {
  Certificate cert{std::move(coloring), n, s, false, std::nullopt, std::nullopt, std::move(recipe)};
  const auto cover = smallest_star_cover(cert.coloring, n);
  if (!cover) {
    cert.passed = true; // no K_{1,n} at all
    return cert;
  }
  cert.min_colors = static_cast<int>(cover->colors.size());
  cert.passed = *cert.min_colors >= s + 1;
  if (!cert.passed)
    cert.offending = cover;
  return cert;
}

} // namespace starramsey
