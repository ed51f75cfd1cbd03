#pragma once

#include "starramsey/core.hpp"

#include <cstdint>
#include <optional>

namespace starramsey {

/// Uniform random t-coloring of K_p for one trial. The stream depends only on
/// (seed, trial), never on evaluation order.
EdgeColoring random_coloring(int p, int t, std::uint64_t seed, std::uint64_t trial);

struct SampleOutcome {
  bool passed = true;
  std::int64_t trials = 0;
  std::optional<std::int64_t> failing_trial;  // lowest failing trial index
  std::optional<EdgeColoring> counterexample; // proves R > p
};

/// Draws `trials` random colorings of K_p and checks each contains an n-star
/// with at most s colors. A pass is evidence for R <= p, not a proof.
/// `threads` <= 0 uses the OpenMP default.
SampleOutcome sample_upper_check(int p, int n, int t, int s, std::int64_t trials,
                                 std::uint64_t seed, int threads = 0);

/// Single-threaded reference for sample_upper_check.
SampleOutcome sample_upper_check_serial(int p, int n, int t, int s, std::int64_t trials,
                                        std::uint64_t seed);

} // namespace starramsey
