#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace starramsey {

struct OracleConfig {
  int edge_budget = 21; // largest p(p-1)/2 the search will attempt
  int max_colors = 4;
  int threads = 0;      // <= 0: OpenMP default
  int split_depth = 8;  // edges fixed before handing subtrees to workers
};

/// Work counters. Identical for a given instance whatever the thread count.
struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t canonical_prunes = 0; // color choices skipped by canonical introduction
  std::uint64_t bound_prunes = 0;     // subtrees cut by the upper bound
  std::uint64_t subtrees = 0;

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct OracleResult {
  int value = 0; // max over colorings of min_star_colors
  SearchStats stats;
};

/// f(p, n, t) = max over all t-colorings of K_p of the fewest colors on an
/// n-star. R_{s,t}(K_{1,n}) <= p iff f(p, n, t) <= s. Requires 1 <= n <= p-1.
/// Throws InfeasibleInstance beyond the configured budget.
OracleResult oracle_max_min_star_colors(int p, int n, int t, const OracleConfig& config = {});

struct RamseySearch {
  std::optional<int> value; // nullopt: R > p_max
  SearchStats stats;        // summed over every p tried
  std::vector<std::pair<int, int>> profile; // (p, f(p,n,t)) for each p searched
};

/// Smallest p <= p_max with f(p, n, t) <= s.
RamseySearch oracle_ramsey(int n, int t, int s, int p_max, const OracleConfig& config = {});

namespace reference {

/// The same pruned search, single-threaded with one shared incumbent.
OracleResult max_min_star_colors_serial(int p, int n, int t, const OracleConfig& config = {});

/// Plain enumeration of all t^E colorings, no symmetry breaking or bounds.
/// Intended for tiny instances in tests.
int max_min_star_colors_brute(int p, int n, int t);

} // namespace reference

} // namespace starramsey
