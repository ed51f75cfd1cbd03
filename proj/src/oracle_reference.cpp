#include "oracle_search.hpp"
#include "starramsey/errors.hpp"
#include "starramsey/verify.hpp"

#include <string>

namespace starramsey::reference {

OracleResult max_min_star_colors_serial(int p, int n, int t, const OracleConfig& config) {
  detail::check_oracle_args(p, n, t, config);
  const detail::OracleInstance instance(p, n, t);
  detail::ColoringSearch search(instance);
  OracleResult result;
  result.value = search.run(0, 0);
  result.stats = search.stats();
  result.stats.subtrees = 1;
  return result;
}

int max_min_star_colors_brute(int p, int n, int t) {
  if (n < 1 || n > p - 1 || t < 1)
    throw InvalidParameter("brute force needs 1 <= n <= p-1 and t >= 1");
  const auto edges = static_cast<std::size_t>(edge_count(p));
  if (edges > 16)
    throw InfeasibleInstance("brute force limited to 16 edges, K_" + std::to_string(p) + " has " +
                             std::to_string(edges));
  std::vector<int> colors(edges, 1);
  int best = 0;
  while (true) {
    const EdgeColoring c(p, t, colors);
    best = std::max(best, min_star_colors(c, n).value_or(0));
    std::size_t i = 0;
    while (i < edges && ++colors[i] > t)
      colors[i++] = 1;
    if (i == edges)
      break;
  }
  return best;
}

} // namespace starramsey::reference
