#pragma once

// Frieze entries as labels of the diagonals of the m-gon, the Ptolemy
// relations between them, and clusters (triangulations) whose diagonal
// labels avoid zero.
//
// The pair (i, j), 1 <= i < j <= m, is labelled by c_{i+1,j+1}; sides of
// the polygon get 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quiddity/frieze.hpp"
#include "quiddity/triangulation.hpp"

namespace quiddity {

struct Cluster {
  Triangulation triangulation;
  std::vector<RingElement> labels;  // aligned with triangulation.diagonals()
};

namespace detail {

inline RingElement pair_label(const FriezePattern& f, long i, long j) { return f.entry(i + 1, j + 1); }

}  // namespace detail

inline RingElement diagonal_label(const FriezePattern& f, long i, long j) {
  const long m = f.period();
  if (i > j) std::swap(i, j);
  if (i < 1 || j > m || i == j) throw error(errc::usage, "vertex pair out of range");
  if (is_polygon_edge(m, i, j))
    throw error(errc::not_applicable, "(" + std::to_string(i) + ", " + std::to_string(j) + ") is a side, not a diagonal");
  return detail::pair_label(f, i, j);
}

// For a < b < c < d: L(a,c) L(b,d) = L(a,b) L(c,d) + L(a,d) L(b,c). With
// sample == 0 every quadruple is checked, otherwise `sample` random ones.
inline bool check_ptolemy(const FriezePattern& f, std::size_t sample = 0, std::uint64_t seed = 1) {
  const long m = f.period();
  if (m < 4) return true;
  auto L = [&](long i, long j) { return detail::pair_label(f, i, j); };
  auto holds = [&](long a, long b, long c, long d) { return L(a, c) * L(b, d) == L(a, b) * L(c, d) + L(a, d) * L(b, c); };
  if (sample == 0) {
    for (long a = 1; a <= m; ++a)
      for (long b = a + 1; b <= m; ++b)
        for (long c = b + 1; c <= m; ++c)
          for (long d = c + 1; d <= m; ++d)
            if (!holds(a, b, c, d)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, m);
  for (std::size_t s = 0; s < sample; ++s) {
    std::array<long, 4> v;
    do {
      for (long& x : v) x = pick(rng);
      std::sort(v.begin(), v.end());
    } while (std::adjacent_find(v.begin(), v.end()) != v.end());
    if (!holds(v[0], v[1], v[2], v[3])) return false;
  }
  return true;
}

// Whether c_i c_{i+1} = 1 or c_i = c_{i+1} = 0 for every i (cyclically).
// For a quiddity cycle this forces (1, ..., 1) with m = 3 mod 6; that
// conclusion is checked.
inline bool is_degenerate_alternating(const Cycle& cycle) {
  const long m = static_cast<long>(cycle.size());
  if (m % 2 == 0) throw error(errc::not_applicable, "is_degenerate_alternating needs an odd length");
  for (long i = 1; i <= m; ++i) {
    const RingElement& x = cycle.at(i);
    const RingElement& y = cycle.at(i + 1);
    if (!((x * y).is_one() || (x.is_zero() && y.is_zero()))) return false;
  }
  if (is_quiddity(cycle)) {
    bool ones = std::all_of(cycle.entries().begin(), cycle.entries().end(), [](const RingElement& e) { return e.is_one(); });
    if (!ones || m % 6 != 3) throw invariant_violation(to_string(cycle) + " is degenerate but not all ones with m = 3 mod 6");
  }
  return true;
}

inline Cluster make_cluster(const FriezePattern& f, const Triangulation& tri) {
  if (tri.m() != f.period()) throw error(errc::usage, "triangulation and frieze sizes differ");
  Cluster c{tri, {}};
  for (auto [i, j] : tri.diagonals()) c.labels.push_back(detail::pair_label(f, i, j));
  return c;
}

inline bool is_zero_free(const Cluster& c) {
  return std::none_of(c.labels.begin(), c.labels.end(), [](const RingElement& e) { return e.is_zero(); });
}

// For m = 6l + 3: {(1,3)} + {(1,3k-1), (1,3k) : 2 <= k <= 2l}
//               + {(3k,3k+2) : 1 <= k <= 2l} + {(1,6l+2)}.
inline Cluster all_ones_cluster(long m) {
  if (m < 3 || m % 6 != 3) throw error(errc::not_applicable, "all_ones_cluster needs m = 3 mod 6");
  std::vector<RingElement> ones(static_cast<std::size_t>(m), RingElement::integer(1));
  const FriezePattern f = frieze_from_cycle(Cycle(RingDescriptor::integers(), ones));
  if (m == 3) return make_cluster(f, Triangulation(3, {}));
  const long l = (m - 3) / 6;
  std::vector<Diagonal> d{{1, 3}};
  for (long k = 2; k <= 2 * l; ++k) {
    d.emplace_back(1, 3 * k - 1);
    d.emplace_back(1, 3 * k);
  }
  for (long k = 1; k <= 2 * l; ++k) d.emplace_back(3 * k, 3 * k + 2);
  d.emplace_back(1, 6 * l + 2);
  Cluster c = make_cluster(f, Triangulation(m, d));
  if (!is_zero_free(c)) throw invariant_violation("all-ones cluster has a zero label");
  return c;
}

// First triangulation in enumeration order whose diagonal labels are all
// nonzero; none for the all-zero cycle.
inline std::optional<Cluster> find_zero_free_cluster(const Cycle& cycle) {
  if (cycle.size() < 4) throw error(errc::not_applicable, "find_zero_free_cluster needs m >= 4");
  const FriezePattern f = frieze_from_cycle(cycle);
  for (const auto& tri : *enumerate_triangulations(static_cast<long>(cycle.size()))) {
    Cluster c = make_cluster(f, tri);
    if (is_zero_free(c)) return c;
  }
  if (!all_zero(cycle)) throw invariant_violation("no zero-free cluster for " + to_string(cycle));
  return std::nullopt;
}

}  // namespace quiddity
