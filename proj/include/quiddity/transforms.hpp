#pragma once

// Local rewrites of eta-products. Positions are 1-based and cyclic.
//
// When the rewritten window does not wrap past position m, the full
// products satisfy prod eta(out) = sign * prod eta(in) exactly. A wrapping
// window gives a cyclic conjugate of that, which still preserves the
// property of being an epsilon-cycle.
//
// Shrinking rules keep the surviving entries in their slots and erase the
// others, e.g. contract_one on (a, 1, b) leaves (a-1, b-1) where a and b
// were. Growing rules insert directly after slot k.

#include <algorithm>
#include <array>
#include <vector>

#include "quiddity/cycle.hpp"

namespace quiddity {

struct SignedCycle {
  Cycle cycle;
  int sign = 1;  // prod eta(cycle) = sign * prod eta(original)
};

namespace detail {

inline std::vector<RingElement> mutable_entries(const Cycle& c) { return c.entries(); }

inline Cycle erase_slots(const Cycle& c, std::vector<RingElement> entries, std::vector<std::size_t> slots) {
  std::sort(slots.begin(), slots.end());
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) entries.erase(entries.begin() + static_cast<long>(*it));
  return Cycle(c.ring(), std::move(entries));
}

inline void require_length(const Cycle& c, std::size_t min, const char* rule) {
  if (c.size() < min)
    throw error(errc::not_applicable, std::string(rule) + " needs a cycle of length at least " + std::to_string(min));
}

inline void require_entry(const Cycle& c, long k, long value, const char* rule) {
  if (!(c.at(k) == RingElement::from_integer(c.ring(), value)))
    throw error(errc::rule_not_applicable,
                std::string(rule) + ": entry " + std::to_string(k) + " is " + to_string(c.at(k)) + ", not " + std::to_string(value));
}

inline SignedCycle expand(const Cycle& c, long k, long unit) {
  require_length(c, 2, "expand");
  const RingElement u = RingElement::from_integer(c.ring(), unit);
  auto e = mutable_entries(c);
  const std::size_t s = c.slot(k);
  e[s] += u;
  e[c.slot(k + 1)] += u;
  e.insert(e.begin() + static_cast<long>(s) + 1, u);
  return {Cycle(c.ring(), std::move(e)), static_cast<int>(unit)};
}

inline SignedCycle contract(const Cycle& c, long k, long unit, const char* rule) {
  require_length(c, 3, rule);
  require_entry(c, k, unit, rule);
  const RingElement u = RingElement::from_integer(c.ring(), unit);
  auto e = mutable_entries(c);
  e[c.slot(k - 1)] -= u;
  e[c.slot(k + 1)] -= u;
  return {erase_slots(c, std::move(e), {c.slot(k)}), static_cast<int>(unit)};
}

}  // namespace detail

// eta(a) eta(b) = eta(a+1) eta(1) eta(b+1): 1 inserted after position k.
inline SignedCycle expand_one(const Cycle& c, long k) { return detail::expand(c, k, 1); }
inline SignedCycle contract_one(const Cycle& c, long k) { return detail::contract(c, k, 1, "contract_one"); }

// eta(a) eta(b) = -eta(a-1) eta(-1) eta(b-1)
inline SignedCycle expand_minus_one(const Cycle& c, long k) { return detail::expand(c, k, -1); }
inline SignedCycle contract_minus_one(const Cycle& c, long k) { return detail::contract(c, k, -1, "contract_minus_one"); }

// (a, u, v, b) at positions k-1..k+2 becomes
// (a + (1-v)/(uv-1), uv-1, b + (1-u)/(uv-1)).
inline Cycle contract_uv(const Cycle& c, long k) {
  detail::require_length(c, 4, "contract_uv");
  const RingElement& a = c.at(k - 1);
  const RingElement& u = c.at(k);
  const RingElement& v = c.at(k + 1);
  const RingElement& b = c.at(k + 2);
  const RingElement one = RingElement::one(c.ring());
  const RingElement w = u * v - one;
  if (w.is_zero()) throw error(errc::singular, "contract_uv: uv - 1 = 0");
  auto e = detail::mutable_entries(c);
  e[c.slot(k - 1)] = a + divide(one - v, w);
  e[c.slot(k)] = w;
  e[c.slot(k + 2)] = b + divide(one - u, w);
  return detail::erase_slots(c, std::move(e), {c.slot(k + 1)});
}

// (a, u, v, b) at positions k-1..k+2 becomes
// (a + (1/lambda - 1) v/(uv-1), lambda u, v/lambda, b + (lambda - 1) u/(uv-1)).
inline Cycle rescale_lambda(const Cycle& c, long k, const RingElement& lambda) {
  detail::require_length(c, 4, "rescale_lambda");
  if (lambda.is_zero()) throw error(errc::singular, "rescale_lambda: lambda = 0");
  const RingElement& a = c.at(k - 1);
  const RingElement& u = c.at(k);
  const RingElement& v = c.at(k + 1);
  const RingElement& b = c.at(k + 2);
  const RingElement one = RingElement::one(c.ring());
  const RingElement w = u * v - one;
  if (w.is_zero()) throw error(errc::singular, "rescale_lambda: uv - 1 = 0");
  const RingElement inv = divide(one, lambda);
  auto e = detail::mutable_entries(c);
  e[c.slot(k - 1)] = a + divide((inv - one) * v, w);
  e[c.slot(k)] = lambda * u;
  e[c.slot(k + 1)] = v * inv;
  e[c.slot(k + 2)] = b + divide((lambda - one) * u, w);
  return Cycle(c.ring(), std::move(e));
}

// eta(a) eta(0) eta(b) = -eta(a+b): positions k-1, k vanish and a+b takes
// the place of b.
inline SignedCycle contract_zero(const Cycle& c, long k) {
  detail::require_length(c, 3, "contract_zero");
  detail::require_entry(c, k, 0, "contract_zero");
  auto e = detail::mutable_entries(c);
  e[c.slot(k + 1)] = c.at(k - 1) + c.at(k + 1);
  return {detail::erase_slots(c, std::move(e), {c.slot(k - 1), c.slot(k)}), -1};
}

// eta(a) eta(0) eta(b) = eta(a+u) eta(0) eta(b-u)
inline Cycle shift_zero(const Cycle& c, long k, const RingElement& u) {
  detail::require_length(c, 3, "shift_zero");
  detail::require_entry(c, k, 0, "shift_zero");
  auto e = detail::mutable_entries(c);
  e[c.slot(k - 1)] += u;
  e[c.slot(k + 1)] -= u;
  return Cycle(c.ring(), std::move(e));
}

// diag(1/z, z) eta(a) eta(u) eta(b) diag(z, 1/z) = eta(a') eta(u) eta(b') with
// a' = a/z^2 - (1/z^2 - 1)/u and b' = z^2 b - (z^2 - 1)/u.
inline std::array<RingElement, 3> conjugate_diag(const RingElement& a, const RingElement& u, const RingElement& b,
                                                 const RingElement& z) {
  if (u.is_zero()) throw error(errc::singular, "conjugate_diag: u = 0");
  if (z.is_zero()) throw error(errc::singular, "conjugate_diag: z = 0");
  const RingElement one = one_like(z);
  const RingElement z2 = z * z;
  const RingElement inv2 = divide(one, z2);
  return {a * inv2 - divide(inv2 - one, u), u, z2 * b - divide(z2 - one, u)};
}

// (t c_1, c_2/t, t c_3, ..., c_m/t) for m even.
inline Cycle scale_alternating(const Cycle& c, const RingElement& t) {
  if (c.size() % 2 != 0) throw error(errc::not_applicable, "scale_alternating needs an even length");
  if (t.is_zero()) throw error(errc::singular, "scale_alternating: t = 0");
  std::vector<RingElement> e;
  e.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) e.push_back(k % 2 == 0 ? c.entries()[k] * t : divide(c.entries()[k], t));
  return Cycle(c.ring(), std::move(e));
}

}  // namespace quiddity
