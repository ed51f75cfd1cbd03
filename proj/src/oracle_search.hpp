#pragma once

// Internal: the branch-and-bound engine shared by the parallel oracle and its
// serial reference.

#include "starramsey/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace starramsey::detail {

struct OracleInstance {
  int p = 0;
  int n = 0;
  int t = 0;
  std::vector<std::pair<int, int>> ends; // 0-based endpoints, lexicographic

  OracleInstance(int order, int leaves, int colors);
  int edges() const { return static_cast<int>(ends.size()); }
  int cap() const { return std::min(n, t); }
};

void check_oracle_args(int p, int n, int t, const OracleConfig& config);

/// Depth-first assignment of colors to edges in lexicographic order.
/// A new color is only introduced after all smaller ones, which removes the
/// t! relabelings of every coloring.
class ColoringSearch {
public:
  explicit ColoringSearch(const OracleInstance& instance);

  /// Colors the first prefix.size() edges as given (0-based colors).
  void apply_prefix(const std::vector<std::uint8_t>& prefix);

  /// Searches every completion from edge `from`; returns the best value
  /// found, at least `incumbent`.
  int run(int from, int incumbent);

  /// Canonical partial colorings of the first `depth` edges.
  std::vector<std::vector<std::uint8_t>> prefixes(int depth);

  const SearchStats& stats() const { return stats_; }

private:
  void assign(int e, int c);
  void unassign(int e, int c);
  int bound() const;
  void dfs(int e);
  void enumerate(int e, int depth, std::vector<std::uint8_t>& current,
                 std::vector<std::vector<std::uint8_t>>& out);

  const OracleInstance& in_;
  std::vector<int> deg_;   // p x t color degrees
  std::vector<int> rem_;   // uncolored edges per vertex
  std::vector<int> uses_;  // edges per color
  std::vector<std::uint8_t> color_;
  int used_colors_ = 0;
  int incumbent_ = 0;
  SearchStats stats_;
  mutable std::vector<int> scratch_;
};

} // namespace starramsey::detail
