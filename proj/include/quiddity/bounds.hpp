#pragma once

// Entry bounds for quiddity cycles over rings whose nonzero elements have
// absolute value at least M. All comparisons use norm_sq against squared
// bounds.

#include <optional>
#include <utility>
#include <vector>

#include "quiddity/cycle.hpp"

namespace quiddity {

struct BoundContext {
  Rational M;  // infimum of |x| over nonzero x
  long n = 0;  // height
  Rational B;  // bound on |c_k|
};

// ((n-1) + 2M) / M^2
inline Rational quiddity_bound(const Rational& M, long n) {
  if (sgn(M) <= 0) throw error(errc::usage, "M must be positive");
  if (n < 1) throw error(errc::usage, "height must be at least 1");
  return (Rational(n - 1) + 2 * M) / (M * M);
}

inline BoundContext make_bound_context(const Rational& M, long n) { return {M, n, quiddity_bound(M, n)}; }

inline bool norm_below_two(const RingElement& x) { return norm_sq(x) < 4; }

// Smallest j in 2..m-1 with |c_j| < 2, given |c_m| >= 1 and
// |c_1 e - d| > |e| for the first column (d, e) of the full product.
inline long find_small_window(const Cycle& cycle) {
  const long m = static_cast<long>(cycle.size());
  if (m < 3) throw error(errc::not_applicable, "find_small_window needs length at least 3");
  const Matrix p = full_product(cycle);
  const RingElement& d = p.a11;
  const RingElement& e = p.a21;
  if (norm_sq(cycle.at(m)) < 1) throw error(errc::not_applicable, "|c_m| < 1");
  if (!(norm_sq(cycle.at(1) * e - d) > norm_sq(e))) throw error(errc::not_applicable, "|c_1 e - d| <= |e|");
  for (long j = 2; j <= m - 1; ++j)
    if (norm_below_two(cycle.at(j))) return j;
  throw invariant_violation("no entry of absolute value below 2 in " + to_string(cycle));
}

// Two smallest indices j < k with |c_j|, |c_k| < 2; the full product must be
// a scalar matrix.
inline std::pair<long, long> find_two_small(const Cycle& cycle) {
  if (cycle.empty()) throw error(errc::usage, "empty cycle");
  const Matrix p = full_product(cycle);
  if (!(p.is_scalar(p.a11))) throw error(errc::usage, to_string(cycle) + ": product is not a scalar matrix");
  std::vector<long> hits;
  for (long j = 1; j <= static_cast<long>(cycle.size()) && hits.size() < 2; ++j)
    if (norm_below_two(cycle.at(j))) hits.push_back(j);
  if (hits.size() < 2) throw invariant_violation("fewer than two small entries in " + to_string(cycle));
  return {hits[0], hits[1]};
}

// Over Z: lexicographically smallest j < k with c_j, c_k in {-1, 0, 1},
// k - j > 1 and {j, k} != {1, m}.
inline std::pair<long, long> find_two_small_separated(const Cycle& cycle) {
  if (cycle.ring().kind != RingKind::integers) throw error(errc::unsupported, "find_two_small_separated works over Z");
  const long m = static_cast<long>(cycle.size());
  if (m <= 3) throw error(errc::not_applicable, "find_two_small_separated needs length > 3");
  if (!is_epsilon_cycle(cycle, -1) && !is_epsilon_cycle(cycle, 1))
    throw error(errc::invalid_cycle, to_string(cycle) + " is not an epsilon-cycle");
  for (long j = 1; j <= m; ++j) {
    if (!norm_below_two(cycle.at(j))) continue;
    for (long k = j + 2; k <= m; ++k)
      if (!(j == 1 && k == m) && norm_below_two(cycle.at(k))) return {j, k};
  }
  throw invariant_violation("no separated small pair in " + to_string(cycle));
}

// Every nonzero x with |x| <= n + 1, sorted.
inline std::vector<RingElement> candidate_entries(RingDescriptor ring, long n) {
  const Rational b = quiddity_bound(1, n);
  return elements_norm_at_most(ring, b * b);
}

}  // namespace quiddity
