#include "starramsey/oracle.hpp"

#include "oracle_search.hpp"
#include "starramsey/core.hpp"
#include "starramsey/errors.hpp"

#include <omp.h>

#include <string>

namespace starramsey {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  canonical_prunes += o.canonical_prunes;
  bound_prunes += o.bound_prunes;
  subtrees += o.subtrees;
  return *this;
}

namespace detail {

OracleInstance::OracleInstance(int order, int leaves, int colors) : p(order), n(leaves), t(colors) {
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      ends.emplace_back(u, v);
}

void check_oracle_args(int p, int n, int t, const OracleConfig& config) {
  if (t < 1)
    throw InvalidParameter("oracle needs t >= 1");
  if (n < 1 || n > p - 1)
    throw InvalidParameter("oracle needs 1 <= n <= p-1, got n=" + std::to_string(n) +
                           " p=" + std::to_string(p));
  if (edge_count(p) > config.edge_budget)
    throw InfeasibleInstance("K_" + std::to_string(p) + " has " + std::to_string(edge_count(p)) +
                             " edges, over the budget of " + std::to_string(config.edge_budget));
  if (t > config.max_colors)
    throw InfeasibleInstance(std::to_string(t) + " colors exceeds the limit of " +
                             std::to_string(config.max_colors));
}

ColoringSearch::ColoringSearch(const OracleInstance& instance)
    : in_(instance), deg_(static_cast<std::size_t>(instance.p * instance.t), 0),
      rem_(static_cast<std::size_t>(instance.p), instance.p - 1),
      uses_(static_cast<std::size_t>(instance.t), 0),
      color_(static_cast<std::size_t>(instance.edges()), 0),
      scratch_(static_cast<std::size_t>(instance.t)) {}

void ColoringSearch::assign(int e, int c) {
  const auto [u, v] = in_.ends[static_cast<std::size_t>(e)];
  ++deg_[static_cast<std::size_t>(u * in_.t + c)];
  ++deg_[static_cast<std::size_t>(v * in_.t + c)];
  --rem_[static_cast<std::size_t>(u)];
  --rem_[static_cast<std::size_t>(v)];
  if (uses_[static_cast<std::size_t>(c)]++ == 0)
    ++used_colors_;
  color_[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(c);
}

void ColoringSearch::unassign(int e, int c) {
  const auto [u, v] = in_.ends[static_cast<std::size_t>(e)];
  --deg_[static_cast<std::size_t>(u * in_.t + c)];
  --deg_[static_cast<std::size_t>(v * in_.t + c)];
  ++rem_[static_cast<std::size_t>(u)];
  ++rem_[static_cast<std::size_t>(v)];
  if (--uses_[static_cast<std::size_t>(c)] == 0)
    --used_colors_;
}

// Upper bound on min_star_colors of any completion. Each vertex's remaining
// edges are poured into its smallest color classes, which minimizes every
// top-k sum at once and so maximizes the colors its n-star needs.
int ColoringSearch::bound() const {
  int best = in_.cap();
  for (int v = 0; v < in_.p; ++v) {
    auto first = deg_.begin() + v * in_.t;
    std::copy(first, first + in_.t, scratch_.begin());
    std::sort(scratch_.begin(), scratch_.end());
    for (int left = rem_[static_cast<std::size_t>(v)]; left > 0; --left) {
      // Raise the first entry of the lowest level; the vector stays sorted.
      auto lowest = std::upper_bound(scratch_.begin(), scratch_.end(), scratch_.front());
      ++*(lowest - 1);
    }
    int covered = 0;
    int k = 0;
    for (auto it = scratch_.rbegin(); it != scratch_.rend() && covered < in_.n; ++it, ++k)
      covered += *it;
    best = std::min(best, k);
    if (best == 0)
      break;
  }
  return best;
}

void ColoringSearch::dfs(int e) {
  ++stats_.nodes;
  const int b = bound();
  if (e == in_.edges()) {
    incumbent_ = std::max(incumbent_, b);
    return;
  }
  if (b <= incumbent_) {
    ++stats_.bound_prunes;
    return;
  }
  const int choices = std::min(used_colors_ + 1, in_.t);
  stats_.canonical_prunes += static_cast<std::uint64_t>(in_.t - choices);
  for (int c = 0; c < choices && incumbent_ < in_.cap(); ++c) {
    assign(e, c);
    dfs(e + 1);
    unassign(e, c);
  }
}

void ColoringSearch::apply_prefix(const std::vector<std::uint8_t>& prefix) {
  for (std::size_t e = 0; e < prefix.size(); ++e)
    assign(static_cast<int>(e), prefix[e]);
}

int ColoringSearch::run(int from, int incumbent) {
  incumbent_ = incumbent;
  dfs(from);
  return incumbent_;
}

void ColoringSearch::enumerate(int e, int depth, std::vector<std::uint8_t>& current,
                               std::vector<std::vector<std::uint8_t>>& out) {
  if (e == depth) {
    out.push_back(current);
    return;
  }
  ++stats_.nodes;
  const int choices = std::min(used_colors_ + 1, in_.t);
  stats_.canonical_prunes += static_cast<std::uint64_t>(in_.t - choices);
  for (int c = 0; c < choices; ++c) {
    assign(e, c);
    current.push_back(static_cast<std::uint8_t>(c));
    enumerate(e + 1, depth, current, out);
    current.pop_back();
    unassign(e, c);
  }
}

std::vector<std::vector<std::uint8_t>> ColoringSearch::prefixes(int depth) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> current;
  enumerate(0, depth, current, out);
  return out;
}

} // namespace detail

OracleResult oracle_max_min_star_colors(int p, int n, int t, const OracleConfig& config) {
  detail::check_oracle_args(p, n, t, config);
  const detail::OracleInstance instance(p, n, t);
  const int depth = std::clamp(config.split_depth, 0, instance.edges());

  detail::ColoringSearch splitter(instance);
  const auto prefixes = splitter.prefixes(depth);

  std::vector<int> values(prefixes.size(), 0);
  std::vector<SearchStats> stats(prefixes.size());
  const int workers = config.threads > 0 ? config.threads : omp_get_max_threads();

  // Each subtree starts from incumbent 0 and never sees the others' results,
  // so its work is the same whichever thread runs it.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    detail::ColoringSearch search(instance);
    search.apply_prefix(prefixes[i]);
    values[i] = search.run(depth, 0);
    stats[i] = search.stats();
    stats[i].subtrees = 1;
  }

  OracleResult result;
  result.stats = splitter.stats();
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    result.value = std::max(result.value, values[i]);
    result.stats += stats[i];
  }
  return result;
}

RamseySearch oracle_ramsey(int n, int t, int s, int p_max, const OracleConfig& config) {
  if (n < 1 || t < 1 || s < 1)
    throw InvalidParameter("oracle needs n, t, s >= 1");
  RamseySearch out;
  // K_p with p - 1 < n has no n-star, so R > p there.
  for (int p = std::max(2, n + 1); p <= p_max; ++p) {
    const OracleResult r = oracle_max_min_star_colors(p, n, t, config);
    out.stats += r.stats;
    out.profile.emplace_back(p, r.value);
    if (r.value <= s) {
      out.value = p;
      break;
    }
  }
  return out;
}

} // namespace starramsey
