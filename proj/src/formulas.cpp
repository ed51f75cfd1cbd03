#include "starramsey/formulas.hpp"

#include "starramsey/errors.hpp"

#include <cassert>
#include <string>

namespace starramsey {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

bool odd(std::int64_t v) { return v % 2 != 0; }

// y = floor((t(n-l+1) - l) / (t-l)); the general lower bound is R > y - eps.
void fill_lower_quantities(CaseData& d, std::int64_t n, std::int64_t t, std::int64_t l) {
  d.y = floor_div(t * (n - l + 1) - l, t - l);
  d.epsilon = odd(d.y) ? 1 : 0;
}

void check_n(int n) {
  if (n < 1)
    throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
}

} // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Trivial: return "trivial";
    case CaseTag::EvenX: return "thm3-even-x";
    case CaseTag::Thm3Case1: return "thm3-case1";
    case CaseTag::Thm3Case2: return "thm3-case2";
    case CaseTag::Thm3Case3: return "thm3-case3";
    case CaseTag::ThreeColors: return "three-colors";
    case CaseTag::PlusOneA: return "x+1(a)";
    case CaseTag::PlusOneB: return "x+1(b)";
    case CaseTag::PlusOneC: return "x+1(c)";
    case CaseTag::PlusOneD: return "x+1(d)";
    case CaseTag::PlusOneE: return "x+1(e)";
    case CaseTag::ExactA: return "x(a)";
    case CaseTag::ExactB: return "x(b)";
    case CaseTag::ExactC: return "x(c)";
    case CaseTag::MinusOneA: return "x-1(a)";
    case CaseTag::MinusOneB: return "x-1(b)";
    case CaseTag::MinusOneC: return "x-1(c)";
    case CaseTag::MinusOneD: return "x-1(d)";
    case CaseTag::MinusTwo: return "x-2";
  }
  return "unknown";
}

BoundsInterval general_bounds(int n, int t, int l) {
  if (n < 2)
    throw InvalidParameter("general bounds need n >= 2, got " + std::to_string(n));
  if (l < 1 || l >= t)
    throw InvalidParameter("need 1 <= l < t, got l=" + std::to_string(l) + " t=" + std::to_string(t));
  const std::int64_t tp = t / l;
  if (tp < 2)
    throw UnsupportedParameters("floor(t/l) = " + std::to_string(tp) + " < 2; no upper bound");

  CaseData d;
  fill_lower_quantities(d, n, t, l);
  BoundsInterval b;
  b.lower = d.y - d.epsilon + 1;
  // Smallest integer strictly above (t'n - 1)/(t' - 1).
  b.upper = floor_div(tp * n - 1, tp - 1) + 1;
  return b;
}

bool threshold_predicate(std::int64_t l, std::int64_t t, std::int64_t q, std::int64_t r) {
  // t > (2r+4)/l  and  t > 1 + (2q+2r+4)/l, cross-multiplied (l > 0).
  if (!odd(t))
    return t * l > 2 * r + 4;
  return (t - 1) * l > 2 * q + 2 * r + 4;
}

CaseVerdict ramsey_star_s_eq_t_minus_1(int n, int t) {
  if (t < 2)
    throw InvalidParameter("need t >= 2, got " + std::to_string(t));
  check_n(n);

  CaseVerdict v;
  CaseData& d = v.data;
  d.x = (static_cast<std::int64_t>(n) * t - 1) / (t - 1);
  d.q = d.x / t;
  d.r = d.x - t * d.q;
  d.t_prime = t;
  fill_lower_quantities(d, n, t, 1);

  if (n == 1) {
    v.value = 2;
    v.tag = CaseTag::Trivial;
  } else if (!odd(d.x)) {
    v.value = d.x + 1;
    v.tag = CaseTag::EvenX;
  } else if (d.r == 1 && odd(d.q)) {
    v.value = d.x;
    v.tag = CaseTag::Thm3Case1;
  } else if (d.r == 1) {
    v.value = d.x + 1;
    v.tag = CaseTag::Thm3Case2;
  } else {
    v.value = d.x + 1;
    v.tag = CaseTag::Thm3Case3;
  }
  v.witness = plan_witness(static_cast<int>(v.value - 1), n, t, t - 1);
  return v;
}

std::vector<CaseTag> fired_clauses(int n, int t) {
  if (t < 4 || n < 2)
    throw InvalidParameter("clause analysis needs t >= 4 and n >= 2");
  const std::int64_t tp = t / 2;
  const std::int64_t x = (tp * n - 1) / (tp - 1);
  const std::int64_t q = (x - 2) / t;
  const std::int64_t r = (x - 2) % t;
  const std::int64_t T = t;
  const bool t_odd = odd(T);
  const bool x_odd = odd(x);

  std::vector<CaseTag> fired;
  auto add = [&](bool cond, CaseTag tag) {
    if (cond)
      fired.push_back(tag);
  };
  // R = x + 1
  add(r == T - 1 && T - 1 > 2 * q + 4 && !x_odd, CaseTag::PlusOneA);
  add(r == T - 1 && T - 1 > 2 * q + 4 && x_odd && t_odd, CaseTag::PlusOneB);
  add(r == T - 1 && x_odd && !t_odd && !odd(q + 1), CaseTag::PlusOneC);
  add(r < T - 2 && !t_odd && T > 2 * r + 4, CaseTag::PlusOneD);
  add(r < T - 2 && t_odd && T > 2 * q + 2 * r + 5, CaseTag::PlusOneE);
  // R = x
  add(r == T - 1 && x_odd && odd(q + 1), CaseTag::ExactA);
  add(r < T - 2 && !t_odd && T <= 2 * r + 4, CaseTag::ExactB);
  add(r < T - 2 && t_odd && q + r + 3 < T && T <= 2 * q + 2 * r + 5, CaseTag::ExactC);
  // R = x - 1; fractions (2q+9)/3 and (2q+2r+7)/3 compared as 3t > numerator.
  const bool r1_window = r == 1 && t_odd && 3 * T > 2 * q + 9 && T <= q + 4;
  add(r1_window && !x_odd, CaseTag::MinusOneA);
  add(r1_window && x_odd, CaseTag::MinusOneB);
  add(1 < r && r < T - 2 && t_odd && 3 * T > 2 * q + 2 * r + 7 && T <= q + r + 3,
      CaseTag::MinusOneC);
  add(r == T - 2 && (!t_odd || 3 * T > 2 * q + 2 * r + 7), CaseTag::MinusOneD);
  return fired;
}

CaseVerdict ramsey_star_s_eq_t_minus_2(int n, int t) {
  if (t < 3)
    throw InvalidParameter("s = t-2 needs t >= 3, got " + std::to_string(t));
  check_n(n);

  CaseVerdict v;
  CaseData& d = v.data;
  if (n == 1) {
    v.value = 2;
    v.tag = CaseTag::Trivial;
  } else if (t == 3) {
    fill_lower_quantities(d, n, t, 2);
    v.value = 3 * static_cast<std::int64_t>(n) - 1;
    v.tag = CaseTag::ThreeColors;
  } else {
    d.t_prime = t / 2;
    d.x = (d.t_prime * n - 1) / (d.t_prime - 1);
    d.q = (d.x - 2) / t;
    d.r = (d.x - 2) % t;
    fill_lower_quantities(d, n, t, 2);

    const auto fired = fired_clauses(n, t);
    assert(fired.size() <= 1 && "R = x+1 / x / x-1 clauses overlap");
    v.tag = fired.empty() ? CaseTag::MinusTwo : fired.front();
    switch (v.tag) {
      case CaseTag::PlusOneA:
      case CaseTag::PlusOneB:
      case CaseTag::PlusOneC:
      case CaseTag::PlusOneD:
      case CaseTag::PlusOneE: v.value = d.x + 1; break;
      case CaseTag::ExactA:
      case CaseTag::ExactB:
      case CaseTag::ExactC: v.value = d.x; break;
      case CaseTag::MinusOneA:
      case CaseTag::MinusOneB:
      case CaseTag::MinusOneC:
      case CaseTag::MinusOneD: v.value = d.x - 1; break;
      default: v.value = d.x - 2; break;
    }
  }
  v.witness = plan_witness(static_cast<int>(v.value - 1), n, t, t - 2);
  return v;
}

CaseVerdict classify(int n, int t, int s) {
  if (t < 2)
    throw InvalidParameter("need t >= 2, got " + std::to_string(t));
  if (s < 1 || s >= t)
    throw InvalidParameter("need 1 <= s < t, got s=" + std::to_string(s));
  if (s == t - 1)
    return ramsey_star_s_eq_t_minus_1(n, t);
  if (s == t - 2)
    return ramsey_star_s_eq_t_minus_2(n, t);
  throw UnsupportedParameters("exact values only for s = t-1 or s = t-2 (s=" + std::to_string(s) +
                              ", t=" + std::to_string(t) + "); use general bounds");
}

CaseVerdict classify_only(int n, int t, int s) {
  CaseVerdict v = classify(n, t, s);
  v.witness.reset();
  return v;
}

} // namespace starramsey
