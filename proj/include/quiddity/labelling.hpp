#pragma once

// Integer labellings of triangulated polygons and their quiddity cycles.
//
// Admissible: the triangles whose label is not +1 or -1 pair off into
// neighbouring opposite-label "squares", and d = #negative + #zero/2 is even.
// Vertex i then carries the sum of the labels of its triangles.
//
// Gluing blocks used when building a labelling from a cycle. The old edge
// joins the outer vertices; starred vertices are new.
//
//   triangle +1:   a ---- b   ->   a+1 -- 1* -- b+1
//   triangle -1:   a ---- b   ->   a-1 -- -1* -- b-1
//   square:        p ---- s   ->   p -- c* -- 0* -- s-c
//
//                  p ------- s
//                  | \   -c  /      diagonal (p, 0*)
//                  |  c \    /
//                  c* ---- 0*

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiddity/cycle.hpp"
#include "quiddity/reduction.hpp"
#include "quiddity/triangulation.hpp"

namespace quiddity {

class Labelling {
 public:
  Labelling() = default;

  // labels[t] belongs to tri.triangles()[t].
  Labelling(Triangulation tri, std::vector<Integer> labels) : tri_(std::move(tri)), labels_(std::move(labels)) {
    if (labels_.size() != tri_.triangles().size())
      throw error(errc::invalid_labelling, "expected " + std::to_string(tri_.triangles().size()) + " labels, got " +
                                               std::to_string(labels_.size()));
  }

  // From a list of triangles with labels; the diagonals are read off the
  // triangles and must form a triangulation.
  static Labelling from_triangles(long m, const std::vector<std::pair<Triangle, Integer>>& pieces) {
    std::vector<Diagonal> diags;
    for (auto [t, label] : pieces) {
      std::sort(t.begin(), t.end());
      for (auto [x, y] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}})
        if (!is_polygon_edge(m, x, y)) diags.emplace_back(x, y);
    }
    std::sort(diags.begin(), diags.end());
    diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
    Triangulation tri(m, diags);
    std::vector<std::optional<Integer>> slots(tri.triangles().size());
    if (pieces.size() != slots.size()) throw error(errc::invalid_labelling, "triangles do not tile the polygon");
    for (auto [t, label] : pieces) {
      std::sort(t.begin(), t.end());
      const long idx = tri.index_of(t);
      if (idx < 0 || slots[idx]) throw error(errc::invalid_labelling, "triangles do not tile the polygon");
      slots[idx] = label;
    }
    std::vector<Integer> labels;
    for (auto& s : slots) labels.push_back(*s);
    return Labelling(std::move(tri), std::move(labels));
  }

  long m() const { return tri_.m(); }
  const Triangulation& triangulation() const { return tri_; }
  const std::vector<Integer>& labels() const { return labels_; }

  std::optional<Integer> label_of(const Triangle& t) const {
    Triangle s = t;
    std::sort(s.begin(), s.end());
    const long idx = tri_.index_of(s);
    if (idx < 0) return std::nullopt;
    return labels_[idx];
  }

  std::vector<std::pair<Triangle, Integer>> pieces() const {
    std::vector<std::pair<Triangle, Integer>> out;
    for (std::size_t k = 0; k < labels_.size(); ++k) out.emplace_back(tri_.triangles()[k], labels_[k]);
    return out;
  }

  friend bool operator==(const Labelling& a, const Labelling& b) { return a.tri_ == b.tri_ && a.labels_ == b.labels_; }

 private:
  Triangulation tri_;
  std::vector<Integer> labels_;
};

inline Labelling negate(const Labelling& lab) {
  std::vector<Integer> labels;
  for (const auto& x : lab.labels()) labels.push_back(-x);
  return Labelling(lab.triangulation(), std::move(labels));
}

// 2d = 2 #negative + #zero. Only its parity and integrality matter.
inline long twice_d(const Labelling& lab) {
  long n = 0;
  for (const auto& x : lab.labels()) n += sgn(x) < 0 ? 2 : (sgn(x) == 0 ? 1 : 0);
  return n;
}

namespace detail {

inline bool share_side(const Triangle& s, const Triangle& t) {
  int common = 0;
  for (long x : s) common += std::count(t.begin(), t.end(), x) ? 1 : 0;
  return common == 2;
}

}  // namespace detail

// Condition (i): the non-unit triangles admit a perfect matching into
// neighbouring pairs with opposite labels. The neighbour graph is a forest,
// so matching leaves greedily is exact.
inline bool has_square_partition(const Labelling& lab) {
  const auto& tris = lab.triangulation().triangles();
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < tris.size(); ++k)
    if (abs(lab.labels()[k]) != 1) open.push_back(k);
  const std::size_t n = open.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (detail::share_side(tris[open[x]], tris[open[y]]) && lab.labels()[open[x]] == -lab.labels()[open[y]]) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
  std::vector<bool> done(n, false);
  std::vector<std::size_t> degree(n);
  for (std::size_t x = 0; x < n; ++x) degree[x] = adj[x].size();
  std::size_t matched = 0;
  bool progress = true;
  while (matched < n && progress) {
    progress = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) continue;
      if (degree[x] == 0) return false;
      if (degree[x] != 1) continue;
      std::size_t y = *std::find_if(adj[x].begin(), adj[x].end(), [&](std::size_t z) { return !done[z]; });
      done[x] = done[y] = true;
      matched += 2;
      for (std::size_t z : adj[y])
        if (!done[z]) --degree[z];
      progress = true;
    }
  }
  // Whatever is left has all degrees >= 2, impossible in a forest unless empty.
  return matched == n;
}

inline bool is_admissible(const Labelling& lab) {
  const long d2 = twice_d(lab);
  return d2 % 2 == 0 && (d2 / 2) % 2 == 0 && has_square_partition(lab);
}

// Per-vertex label sums, without any admissibility check.
inline Cycle vertex_sums(const Labelling& lab) {
  std::vector<Integer> sums(static_cast<std::size_t>(lab.m()), 0);
  const auto& tris = lab.triangulation().triangles();
  for (std::size_t k = 0; k < tris.size(); ++k)
    for (long v : tris[k]) sums[v - 1] += lab.labels()[k];
  std::vector<RingElement> e;
  for (const auto& s : sums) e.push_back(RingElement::integer(s));
  return Cycle(RingDescriptor::integers(), std::move(e));
}

inline Cycle cycle_from_labelling(const Labelling& lab) {
  if (!is_admissible(lab)) throw error(errc::invalid_labelling, "labelling is not admissible");
  Cycle c = vertex_sums(lab);
  if (!is_quiddity(c)) throw invariant_violation("admissible labelling gave " + to_string(c));
  return c;
}

// Number of triangles at each vertex: the quiddity cycle of the
// Conway-Coxeter frieze of the triangulation.
inline Cycle cc_quiddity(const Triangulation& tri) {
  if (tri.m() == 2) return Cycle::integers({0, 0});
  return vertex_sums(Labelling(tri, std::vector<Integer>(tri.triangles().size(), 1)));
}

// Builds a labelling by reducing the cycle to (0, 0) and gluing the inverse
// blocks onto the 2-gon in reverse order.
inline Labelling labelling_from_cycle(const Cycle& cycle) {
  const ReductionTrace trace = reduce_to_base(cycle);
  const auto groups = invert_trace(trace);
  long size = 2;
  std::vector<std::pair<Triangle, Integer>> pieces;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const GlueInstruction& ins : groups[g]) {
      if (ins.kind == GlueInstruction::negate) {
        for (auto& p : pieces) p.second = -p.second;
        continue;
      }
      // Old vertex v goes to the v-th slot not in `inserted`.
      std::vector<long> where;
      for (long v = 1; v <= ins.size; ++v)
        if (std::find(ins.inserted.begin(), ins.inserted.end(), v) == ins.inserted.end()) where.push_back(v);
      if (static_cast<long>(where.size()) != size) throw invariant_violation("gluing does not match polygon size");
      for (auto& p : pieces)
        for (long& v : p.first) v = where[v - 1];
      for (const auto& piece : ins.pieces) pieces.emplace_back(piece.vertices, piece.label);
      size = ins.size;
    }
    Labelling lab = Labelling::from_triangles(size, pieces);
    const Cycle& expect = trace.steps[trace.steps.size() - 1 - g].before;
    if (!is_admissible(lab) || !(vertex_sums(lab) == expect))
      throw invariant_violation("gluing did not reproduce " + to_string(expect));
  }
  if (groups.empty()) return Labelling(Triangulation(2, {}), {});
  return Labelling::from_triangles(size, pieces);
}

// Witness for the structure of a Conway-Coxeter quiddity cycle: two
// disjoint windows (1, 2) or (2, 1), or a window (1, 3, 1). Positions are
// the first index of each window.
struct CCWitness {
  enum Kind { two_pairs, one_three_one };
  Kind kind;
  std::vector<long> positions;
};

inline CCWitness find_12_or_131(const Cycle& q) {
  const long m = static_cast<long>(q.size());
  if (m <= 3) throw error(errc::not_applicable, "find_12_or_131 needs m > 3");
  auto is = [&](long k, long v) { return q.at(k) == RingElement::integer(v); };
  std::vector<long> pairs;
  for (long k = 1; k <= m; ++k)
    if ((is(k, 1) && is(k + 1, 2)) || (is(k, 2) && is(k + 1, 1))) pairs.push_back(k);
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const long gap = pairs[b] - pairs[a];
      if (gap >= 2 && gap <= m - 2) return {CCWitness::two_pairs, {pairs[a], pairs[b]}};
    }
  for (long k = 1; k <= m; ++k)
    if (is(k, 1) && is(k + 1, 3) && is(k + 2, 1)) return {CCWitness::one_three_one, {k}};
  throw error(errc::not_applicable, to_string(q) + " has neither structure");
}

enum class LabellingCase { TC0, TC1, TC2, TC3, TC4, TC5 };

inline std::string to_string(LabellingCase c) {
  static const char* names[] = {"TC0", "TC1", "TC2", "TC3", "TC4", "TC5"};
  return names[static_cast<int>(c)];
}

struct LabellingStep {
  LabellingCase tag;
  std::vector<long> indices;
  Labelling result;
  std::vector<long> vertex_map;  // vertex_map[v-1] = new number of old vertex v, 0 if removed
};

namespace detail {

// Drops the given vertices and triangles, renumbering the rest densely.
// Returns nothing when the remainder is not a triangulation.
inline std::optional<LabellingStep> remove_pieces(const Labelling& lab, LabellingCase tag, std::vector<long> indices,
                                                  const std::vector<long>& vertices, const std::vector<Triangle>& drop,
                                                  bool flip) {
  const long m = lab.m();
  std::vector<long> map(static_cast<std::size_t>(m), 0);
  long next = 0;
  for (long v = 1; v <= m; ++v)
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) map[v - 1] = ++next;
  std::vector<std::pair<Triangle, Integer>> kept;
  for (auto [t, label] : lab.pieces()) {
    if (std::find(drop.begin(), drop.end(), t) != drop.end()) continue;
    for (long& v : t) {
      if (map[v - 1] == 0) return std::nullopt;
      v = map[v - 1];
    }
    kept.emplace_back(t, flip ? Integer(-label) : label);
  }
  if (static_cast<long>(kept.size()) != std::max(next - 2, 0L)) return std::nullopt;
  try {
    Labelling out = next == 2 ? Labelling(Triangulation(2, {}), {}) : Labelling::from_triangles(next, kept);
    if (!is_admissible(out)) return std::nullopt;
    return LabellingStep{tag, std::move(indices), std::move(out), std::move(map)};
  } catch (const error&) {
    return std::nullopt;
  }
}

inline long wrap(long k, long m) { return ((k - 1) % m + m) % m + 1; }

inline Triangle sorted(long a, long b, long c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Ear at k: the triangle (k-1, k, k+1).
inline std::optional<Integer> ear(const Labelling& lab, long k) {
  const long m = lab.m();
  return lab.label_of(sorted(wrap(k - 1, m), wrap(k, m), wrap(k + 1, m)));
}

// Square on k-1..k+2 with labels (c, -c): its two triangles.
inline std::optional<std::array<Triangle, 2>> square(const Labelling& lab, long k) {
  const long m = lab.m();
  if (m < 4) return std::nullopt;
  const long a = wrap(k - 1, m), b = wrap(k, m), c = wrap(k + 1, m), d = wrap(k + 2, m);
  for (auto [s, t] : {std::pair{sorted(a, b, c), sorted(a, c, d)}, std::pair{sorted(a, b, d), sorted(b, c, d)}}) {
    auto x = lab.label_of(s), y = lab.label_of(t);
    if (x && y && *x == -*y) return std::array<Triangle, 2>{s, t};
  }
  return std::nullopt;
}

inline long cyclic_gap(long j, long k, long m) {
  const long d = ((k - j) % m + m) % m;
  return std::min(d, m - d);
}

}  // namespace detail

// One reduction step on an admissible labelling. Cases are tried in the
// order TC0 > TC1 > ... > TC5 with smallest indices first; a candidate is
// taken only if what remains is an admissible labelling.
inline LabellingStep reduce_labelling_step(const Labelling& lab) {
  if (!is_admissible(lab)) throw error(errc::invalid_labelling, "labelling is not admissible");
  const long m = lab.m();
  std::vector<long> identity_map;
  for (long v = 1; v <= m; ++v) identity_map.push_back(v);
  if (m < 4) return {LabellingCase::TC0, {}, lab, identity_map};

  using detail::ear;
  using detail::square;
  const bool odd = m % 2 == 1;
  for (long k = 1; k <= m; ++k)
    if (auto e = ear(lab, k); e && *e == 1)
      if (auto r = detail::remove_pieces(lab, LabellingCase::TC1, {k}, {k},
                                         {detail::sorted(detail::wrap(k - 1, m), k, detail::wrap(k + 1, m))}, false))
        return *r;
  if (odd)
    for (long k = 1; k <= m; ++k)
      if (auto sq = square(lab, k))
        if (auto r = detail::remove_pieces(lab, LabellingCase::TC2, {k}, {k, detail::wrap(k + 1, m)},
                                           {(*sq)[0], (*sq)[1]}, true))
          return *r;
  if (!odd)
    for (long k = 1; k <= m; ++k)
      if (auto e = ear(lab, k); e && *e == -1)
        if (auto r = detail::remove_pieces(lab, LabellingCase::TC3, {k}, {k},
                                           {detail::sorted(detail::wrap(k - 1, m), k, detail::wrap(k + 1, m))}, true))
          return *r;
  for (long j = 1; j <= m; ++j)
    for (long k = j + 2; k <= m; ++k) {
      if (detail::cyclic_gap(j, k, m) < 2) continue;
      auto sj = square(lab, j), sk = square(lab, k);
      if (!sj || !sk) continue;
      if (auto r = detail::remove_pieces(lab, LabellingCase::TC4, {j, k},
                                         {j, detail::wrap(j + 1, m), k, detail::wrap(k + 1, m)},
                                         {(*sj)[0], (*sj)[1], (*sk)[0], (*sk)[1]}, false))
        return *r;
    }
  for (long j = 1; j <= m; ++j)
    for (long k = j + 2; k <= m; ++k) {
      if (detail::cyclic_gap(j, k, m) < 2) continue;
      auto ej = ear(lab, j), ek = ear(lab, k);
      if (!ej || !ek || *ej != -1 || *ek != -1) continue;
      if (auto r = detail::remove_pieces(
              lab, LabellingCase::TC5, {j, k}, {j, k},
              {detail::sorted(detail::wrap(j - 1, m), j, detail::wrap(j + 1, m)),
               detail::sorted(detail::wrap(k - 1, m), k, detail::wrap(k + 1, m))},
              false))
        return *r;
    }
  throw invariant_violation("no reduction case applies to an admissible labelling");
}

}  // namespace quiddity
