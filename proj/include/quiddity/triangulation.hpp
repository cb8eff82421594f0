#pragma once

// Triangulations of a convex m-gon with vertices 1..m counterclockwise.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quiddity/error.hpp"

namespace quiddity {

using Diagonal = std::pair<long, long>;     // i < j
using Triangle = std::array<long, 3>;       // sorted

inline bool is_polygon_edge(long m, long i, long j) {
  if (i > j) std::swap(i, j);
  return j - i == 1 || (i == 1 && j == m);
}

inline bool diagonals_cross(const Diagonal& p, const Diagonal& q) {
  auto [a, b] = p;
  auto [c, d] = q;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

class Triangulation {
 public:
  Triangulation() = default;

  Triangulation(long m, std::vector<Diagonal> diagonals) : m_(m), diagonals_(std::move(diagonals)) {
    if (m < 2) throw error(errc::usage, "a polygon needs at least 2 vertices");
    for (auto& d : diagonals_) {
      if (d.first > d.second) std::swap(d.first, d.second);
      if (d.first < 1 || d.second > m || d.second - d.first < 2 || is_polygon_edge(m, d.first, d.second))
        throw error(errc::invalid_labelling,
                    "(" + std::to_string(d.first) + ", " + std::to_string(d.second) + ") is not a diagonal of the " +
                        std::to_string(m) + "-gon");
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
      throw error(errc::invalid_labelling, "repeated diagonal");
    const long need = m >= 3 ? m - 3 : 0;
    if (static_cast<long>(diagonals_.size()) != need)
      throw error(errc::invalid_labelling, "a triangulation of the " + std::to_string(m) + "-gon has " +
                                               std::to_string(need) + " diagonals");
    for (std::size_t x = 0; x < diagonals_.size(); ++x)
      for (std::size_t y = x + 1; y < diagonals_.size(); ++y)
        if (diagonals_cross(diagonals_[x], diagonals_[y])) throw error(errc::invalid_labelling, "crossing diagonals");
    derive_triangles();
  }

  long m() const { return m_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  bool has_side(long i, long j) const {
    if (i > j) std::swap(i, j);
    return is_polygon_edge(m_, i, j) || std::binary_search(diagonals_.begin(), diagonals_.end(), Diagonal{i, j});
  }

  // Index of a sorted triangle, or -1.
  long index_of(const Triangle& t) const {
    auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
    return it != triangles_.end() && *it == t ? static_cast<long>(it - triangles_.begin()) : -1;
  }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.m_ == b.m_ && a.diagonals_ == b.diagonals_;
  }

 private:
  void derive_triangles() {
    if (m_ < 3) return;
    for (long i = 1; i <= m_; ++i)
      for (long j = i + 1; j <= m_; ++j) {
        if (!has_side(i, j)) continue;
        for (long k = j + 1; k <= m_; ++k)
          if (has_side(j, k) && has_side(i, k)) triangles_.push_back({i, j, k});
      }
    if (static_cast<long>(triangles_.size()) != m_ - 2) throw invariant_violation("triangle count mismatch");
  }

  long m_ = 2;
  std::vector<Diagonal> diagonals_;
  std::vector<Triangle> triangles_;
};

inline std::ostream& operator<<(std::ostream& os, const Triangulation& t) {
  os << t.m() << "-gon {";
  for (std::size_t k = 0; k < t.diagonals().size(); ++k)
    os << (k ? ", " : "") << "(" << t.diagonals()[k].first << "," << t.diagonals()[k].second << ")";
  return os << "}";
}

namespace detail {

// Diagonal sets of the polygon on the increasing vertex list `v`: the edge
// (v.front(), v.back()) lies in a triangle with apex v[k], k ascending.
inline void triangulate_range(const std::vector<long>& v, std::vector<std::vector<Diagonal>>& out) {
  if (v.size() < 3) {
    out.push_back({});
    return;
  }
  const long first = v.front(), last = v.back();
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    std::vector<std::vector<Diagonal>> left, right;
    triangulate_range(std::vector<long>(v.begin(), v.begin() + static_cast<long>(k) + 1), left);
    triangulate_range(std::vector<long>(v.begin() + static_cast<long>(k), v.end()), right);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<Diagonal> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (v[k] - first >= 2) d.emplace_back(first, v[k]);
        if (last - v[k] >= 2) d.emplace_back(v[k], last);
        out.push_back(std::move(d));
      }
  }
}

}  // namespace detail

// All triangulations in a fixed order; the count is Catalan(m - 2). Results
// are cached per m.
inline std::shared_ptr<const std::vector<Triangulation>> enumerate_triangulations(long m) {
  if (m < 2) throw error(errc::usage, "enumerate_triangulations needs m >= 2");
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const std::vector<Triangulation>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<long> verts;
  for (long i = 1; i <= m; ++i) verts.push_back(i);
  std::vector<std::vector<Diagonal>> sets;
  detail::triangulate_range(verts, sets);
  auto out = std::make_shared<std::vector<Triangulation>>();
  out->reserve(sets.size());
  for (auto& s : sets) out->emplace_back(m, std::move(s));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace quiddity
