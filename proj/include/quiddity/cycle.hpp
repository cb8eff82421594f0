#pragma once

// Cycles (c_1, ..., c_m) and the eta-matrix calculus on them.
//
// Indices are 1-based and cyclic: at(k) == at(k + m) for every integer k.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "quiddity/mat2.hpp"
#include "quiddity/ring.hpp"

namespace quiddity {

class Cycle {
 public:
  Cycle() = default;

  Cycle(RingDescriptor ring, std::vector<RingElement> entries) : ring_(ring), entries_(std::move(entries)) {
    for (const auto& e : entries_)
      if (!(e.ring() == ring_))
        throw error(errc::usage, "cycle over " + ring_.tag() + " has an entry in " + e.ring().tag());
  }

  static Cycle integers(std::initializer_list<long> values) {
    std::vector<RingElement> v;
    for (long x : values) v.push_back(RingElement::integer(x));
    return Cycle(RingDescriptor::integers(), std::move(v));
  }
  static Cycle integers(const std::vector<long>& values) {
    std::vector<RingElement> v;
    for (long x : values) v.push_back(RingElement::integer(x));
    return Cycle(RingDescriptor::integers(), std::move(v));
  }

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<RingElement>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Position k reduced into 0..m-1 for 1-based cyclic k.
  std::size_t slot(long k) const {
    const long m = static_cast<long>(entries_.size());
    if (m == 0) throw error(errc::usage, "empty cycle");
    return static_cast<std::size_t>((((k - 1) % m) + m) % m);
  }

  const RingElement& at(long k) const { return entries_[slot(k)]; }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.ring_ == b.ring_ && a.entries_ == b.entries_; }

 private:
  RingDescriptor ring_{};
  std::vector<RingElement> entries_;
};

inline std::string to_string(const Cycle& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ", ";
    out += to_string(c.entries()[k]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Cycle& c) { return os << to_string(c); }

inline Matrix identity(RingDescriptor ring) { return Matrix::identity(RingElement::zero(ring)); }

// M_{i,j} = eta(c_i) ... eta(c_j). j is lifted by multiples of m until
// j >= i - 1; j == i - 1 is the empty product.
inline Matrix product_interval(const Cycle& cycle, long i, long j) {
  const long m = static_cast<long>(cycle.size());
  if (m == 0) throw error(errc::usage, "empty cycle");
  if (j < i - 1) j += ((i - 1 - j + m - 1) / m) * m;
  Matrix result = identity(cycle.ring());
  for (long k = i; k <= j; ++k) result *= eta(cycle.at(k));
  return result;
}

inline Matrix full_product(const Cycle& cycle) {
  return product_interval(cycle, 1, static_cast<long>(cycle.size()));
}

inline bool is_epsilon_cycle(const Cycle& cycle, int eps) {
  if (eps != 1 && eps != -1) throw error(errc::usage, "epsilon must be +1 or -1");
  if (cycle.empty()) return false;
  return full_product(cycle).is_scalar(RingElement::from_integer(cycle.ring(), eps));
}

inline bool is_quiddity(const Cycle& cycle) { return is_epsilon_cycle(cycle, -1); }

// s = 1 gives (c_m, c_1, ..., c_{m-1}).
inline Cycle rotate(const Cycle& cycle, long s) {
  std::vector<RingElement> out;
  out.reserve(cycle.size());
  for (long k = 1; k <= static_cast<long>(cycle.size()); ++k) out.push_back(cycle.at(k - s));
  return Cycle(cycle.ring(), std::move(out));
}

inline Cycle reverse(const Cycle& cycle) {
  std::vector<RingElement> out(cycle.entries().rbegin(), cycle.entries().rend());
  return Cycle(cycle.ring(), std::move(out));
}

inline Cycle negate(const Cycle& cycle) {
  std::vector<RingElement> out;
  out.reserve(cycle.size());
  for (const auto& e : cycle.entries()) out.push_back(-e);
  return Cycle(cycle.ring(), std::move(out));
}

inline bool all_zero(const Cycle& cycle) {
  return std::all_of(cycle.entries().begin(), cycle.entries().end(), [](const RingElement& e) { return e.is_zero(); });
}

}  // namespace quiddity
