#pragma once

#include "starramsey/recipe.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace starramsey {

/// R_{s,t}(K_{1,n}): n leaves, t colors, at most s colors allowed.
struct Query {
  int n = 1;
  int t = 2;
  int s = 1;

  int l() const { return t - s; }
};

enum class CaseTag {
  Trivial,      // n = 1
  EvenX,        // s = t-1, x even
  Thm3Case1,    // s = t-1, x = tq+1, q odd
  Thm3Case2,    // s = t-1, x = tq+1, q even
  Thm3Case3,    // s = t-1, x = tq+r, 2 <= r <= t-1
  ThreeColors,  // s = 1, t = 3
  PlusOneA,     // R = x+1 clauses (a)..(e)
  PlusOneB,
  PlusOneC,
  PlusOneD,
  PlusOneE,
  ExactA,       // R = x clauses (a)..(c)
  ExactB,
  ExactC,
  MinusOneA,    // R = x-1 clauses (a)..(d)
  MinusOneB,
  MinusOneC,
  MinusOneD,
  MinusTwo,     // none of the above: R = x-2
};

std::string_view to_string(CaseTag tag);

/// Intermediate quantities of the case analysis. For s = t-1: x = tq + r.
/// For s = t-2: x - 2 = tq + r and t_prime = floor(t/2).
struct CaseData {
  std::int64_t x = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t t_prime = 0;
  std::int64_t y = 0;       // general lower-bound quantity for l = t - s
  std::int64_t epsilon = 0; // 1 iff y odd
};

struct CaseVerdict {
  std::int64_t value = 0;
  CaseTag tag = CaseTag::Trivial;
  CaseData data;
  std::optional<WitnessRecipe> witness; // recipe for a K_{value-1} certificate
};

struct BoundsInterval {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// Bounds on R_{t-l,t}(K_{1,n}) for any 1 <= l < t with floor(t/l) >= 2.
BoundsInterval general_bounds(int n, int t, int l);

/// x - l - 2q < n, rewritten in terms of t, q, r (exact integer arithmetic).
bool threshold_predicate(std::int64_t l, std::int64_t t, std::int64_t q, std::int64_t r);

CaseVerdict ramsey_star_s_eq_t_minus_1(int n, int t);
CaseVerdict ramsey_star_s_eq_t_minus_2(int n, int t);

/// Dispatches on s; no witness recipe is planned. Throws UnsupportedParameters
/// for s outside {t-1, t-2}.
CaseVerdict classify_only(int n, int t, int s);

/// Same dispatch as classify_only, with the witness recipe filled in.
CaseVerdict classify(int n, int t, int s);

/// Every R = x+1 / x / x-1 clause whose condition holds, in evaluation order.
/// Defined for t >= 4, n >= 2. More than one entry would mean the clauses
/// are not mutually exclusive.
std::vector<CaseTag> fired_clauses(int n, int t);

} // namespace starramsey
