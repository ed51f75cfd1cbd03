#include "starramsey/sampling.hpp"

#include "starramsey/errors.hpp"
#include "starramsey/verify.hpp"

#include <omp.h>

#include <limits>
#include <random>
#include <string>
#include <vector>

namespace starramsey {

namespace {

// splitmix64 finalizer; decorrelates neighbouring (seed, trial) pairs.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_args(int p, int n, int t, int s, std::int64_t trials) {
  if (p < 1 || n < 1 || t < 1 || s < 1)
    throw InvalidParameter("sample check needs p, n, t, s >= 1");
  if (trials < 1)
    throw InvalidParameter("sample check needs trials >= 1, got " + std::to_string(trials));
}

bool trial_passes(int p, int n, int t, int s, std::uint64_t seed, std::int64_t trial) {
  return has_star_within(random_coloring(p, t, seed, static_cast<std::uint64_t>(trial)), n, s);
}

SampleOutcome finish(int p, int t, std::int64_t trials, std::uint64_t seed,
                     std::int64_t first_failure) {
  SampleOutcome out;
  out.trials = trials;
  if (first_failure != std::numeric_limits<std::int64_t>::max()) {
    out.passed = false;
    out.failing_trial = first_failure;
    out.counterexample = random_coloring(p, t, seed, static_cast<std::uint64_t>(first_failure));
  }
  return out;
}

} // namespace

EdgeColoring random_coloring(int p, int t, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(mix(mix(seed) ^ trial));
  std::uniform_int_distribution<int> pick(1, t);
  std::vector<int> colors(static_cast<std::size_t>(edge_count(p)));
  for (int& c : colors)
    c = pick(rng);
  return EdgeColoring(p, t, std::move(colors));
}

SampleOutcome sample_upper_check_serial(int p, int n, int t, int s, std::int64_t trials,
                                        std::uint64_t seed) {
  check_args(p, n, t, s, trials);
  std::int64_t first_failure = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t i = 0; i < trials; ++i)
    if (!trial_passes(p, n, t, s, seed, i)) {
      first_failure = i;
      break;
    }
  return finish(p, t, trials, seed, first_failure);
}

SampleOutcome sample_upper_check(int p, int n, int t, int s, std::int64_t trials,
                                 std::uint64_t seed, int threads) {
  check_args(p, n, t, s, trials);
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  std::int64_t first_failure = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) num_threads(workers) reduction(min : first_failure)
  for (std::int64_t i = 0; i < trials; ++i)
    if (i < first_failure && !trial_passes(p, n, t, s, seed, i))
      first_failure = i;
  return finish(p, t, trials, seed, first_failure);
}

} // namespace starramsey
