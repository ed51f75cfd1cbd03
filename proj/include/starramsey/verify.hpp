#pragma once

#include "starramsey/core.hpp"
#include "starramsey/recipe.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace starramsey {

/// An edge as read from untrusted input; `line` is 0 when not from a file.
struct ColoredEdge {
  int u = 0;
  int v = 0;
  int color = 0;
  int line = 0;
};

struct Defect {
  enum class Kind { InvalidEdge, DuplicateEdge, MissingEdge, ColorOutOfRange };
  Kind kind;
  int u = 0;
  int v = 0;
  int line = 0;
  std::string message;
};

/// Checks that `edges` colors every edge of K_order exactly once with a color
/// in 1..colors. An empty result means the input is a valid coloring.
std::vector<Defect> validate(int order, int colors, std::span<const ColoredEdge> edges);

class InvalidColoring : public std::runtime_error {
public:
  explicit InvalidColoring(std::vector<Defect> defects);
  const std::vector<Defect>& defects() const { return defects_; }

private:
  std::vector<Defect> defects_;
};

/// validate + build. Throws InvalidColoring listing every defect.
EdgeColoring assemble_coloring(int order, int colors, std::span<const ColoredEdge> edges);

/// A vertex together with the fewest colors covering n of its edges.
struct StarCover {
  VertexId center;
  std::vector<int> colors; // largest color classes at `center`, by count then color
  int edges_covered = 0;
};

/// Fewest distinct colors on any n-star; nullopt when K_p has no n-star
/// (p - 1 < n).
std::optional<int> min_star_colors(const EdgeColoring& coloring, int n);

/// The vertex (lowest index on ties) attaining min_star_colors, with its
/// color set.
std::optional<StarCover> smallest_star_cover(const EdgeColoring& coloring, int n);

/// True iff some n-star uses at most s colors.
bool has_star_within(const EdgeColoring& coloring, int n, int s);

/// Smallest possible sum of the s largest color degrees at a vertex of K_order
/// under t colors (the balanced split of order-1).
int balanced_top_sum(int order, int t, int s);

/// Necessary condition for a certificate on K_order: some t-coloring could
/// keep every vertex's s largest color degrees below n.
bool certificate_possible(int order, int n, int t, int s);

/// Claim: every K_{1,n} in `coloring` uses more than s colors.
struct Certificate {
  EdgeColoring coloring;
  int n = 0;
  int s = 0;
  bool passed = false;
  std::optional<int> min_colors;     // nullopt: no n-star at all
  std::optional<StarCover> offending; // set when !passed
  std::optional<WitnessRecipe> recipe;
};

Certificate check_certificate(EdgeColoring coloring, int n, int s,
                              std::optional<WitnessRecipe> recipe = std::nullopt);

} // namespace starramsey
