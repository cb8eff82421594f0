#pragma once

// Exhaustive enumeration of quiddity cycles of non-zero friezes over the
// discrete rings Z, Z[i], Z[zeta_6], dihedral orbits, and the infinite
// families built from divisors of 2.
//
// The search fixes c_1 .. c_{m-3} depth first. Every window c_i .. c_k
// of length <= n is a frieze entry and must be nonzero. The remaining
// three entries are then forced: with P = eta(c_1) ... eta(c_{m-3}),
//
//   eta(a) eta(b) eta(c) = -P^{-1}   gives   b = P11,
//                                            a = (1 - P12) / b,
//                                            c = (1 + P21) / b.
//
// Entries live in a rank-2 lattice a + b w (w^2 = p w + q) held in int64;
// a task that overflows is redone with exact RingElement arithmetic.

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "quiddity/bounds.hpp"
#include "quiddity/cycle.hpp"
#include "quiddity/frieze.hpp"

namespace quiddity {

struct EnumerationOptions {
  unsigned jobs = 0;     // 0: hardware concurrency
  bool exact = false;    // skip the int64 fast path
};

struct EnumerationResult {
  RingDescriptor ring;
  long height = 0;
  std::size_t total = 0;
  std::size_t orbit_count = 0;
  std::vector<Cycle> representatives;  // canonical forms, sorted
};

inline std::strong_ordering compare(const Cycle& a, const Cycle& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k)
    if (auto c = compare(a.entries()[k], b.entries()[k]); c != 0) return c;
  return a.size() <=> b.size();
}

struct CycleLess {
  bool operator()(const Cycle& a, const Cycle& b) const { return compare(a, b) < 0; }
};

// Lexicographic minimum over the m rotations and m reflected rotations.
inline Cycle canonical_form(const Cycle& cycle) {
  if (cycle.empty()) return cycle;
  Cycle best = cycle;
  const Cycle back = reverse(cycle);
  for (long s = 0; s < static_cast<long>(cycle.size()); ++s)
    for (const Cycle* c : {&cycle, &back}) {
      Cycle r = rotate(*c, s);
      if (compare(r, best) < 0) best = std::move(r);
    }
  return best;
}

// Number of distinct images under the dihedral group.
inline std::size_t orbit_size(const Cycle& cycle) {
  std::vector<Cycle> images;
  const Cycle back = reverse(cycle);
  for (long s = 0; s < static_cast<long>(cycle.size()); ++s)
    for (const Cycle* c : {&cycle, &back}) images.push_back(rotate(*c, s));
  std::sort(images.begin(), images.end(), CycleLess{});
  return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

namespace detail {

struct LatticePoint {
  long long a = 0, b = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw error(errc::overflow, "int64 addition");
  return r;
}
inline long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw error(errc::overflow, "int64 multiplication");
  return r;
}

// Z, Z[i] and Z[zeta_6] as Z[w] with w^2 = p w + q.
class LatticeOps {
 public:
  using Elem = LatticePoint;

  LatticeOps(RingDescriptor ring, long long bound_sq) : ring_(ring), bound_sq_(bound_sq) {
    switch (ring.kind) {
      case RingKind::integers: p_ = 0, q_ = 0; break;
      case RingKind::gaussian_integers: p_ = 0, q_ = -1; break;
      case RingKind::eisenstein_integers: p_ = 1, q_ = -1; break;
      default: throw error(errc::unsupported, "no lattice model for " + ring.tag());
    }
  }

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }
  Elem add(const Elem& x, const Elem& y) const { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
  Elem sub(const Elem& x, const Elem& y) const { return add(x, {checked_mul(y.a, -1), checked_mul(y.b, -1)}); }
  Elem mul(const Elem& x, const Elem& y) const {
    const long long bd = checked_mul(x.b, y.b);
    return {checked_add(checked_mul(x.a, y.a), checked_mul(q_, bd)),
            checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), checked_mul(p_, bd))};
  }
  // conj(w) = p - w
  Elem conj(const Elem& x) const { return {checked_add(x.a, checked_mul(p_, x.b)), -x.b}; }
  long long norm(const Elem& x) const { return mul(x, conj(x)).a; }
  std::optional<Elem> divide(const Elem& x, const Elem& y) const {
    const long long n = norm(y);
    if (n == 0) return std::nullopt;
    const Elem z = mul(x, conj(y));
    if (z.a % n != 0 || z.b % n != 0) return std::nullopt;
    return Elem{z.a / n, z.b / n};
  }
  bool admissible(const Elem& x) const { return !is_zero(x) && norm(x) <= bound_sq_; }

  Elem from(const RingElement& e) const {
    const auto& c = e.coords();
    return {c[0].get_num().get_si(), c.size() > 1 ? c[1].get_num().get_si() : 0};
  }
  RingElement lift(const Elem& x) const {
    if (ring_.kind == RingKind::integers) return RingElement::integer(static_cast<long>(x.a));
    return RingElement(ring_, {Rational(static_cast<long>(x.a)), Rational(static_cast<long>(x.b))});
  }

 private:
  RingDescriptor ring_;
  long long bound_sq_;
  long long p_ = 0, q_ = 0;
};

class ExactOps {
 public:
  using Elem = RingElement;

  ExactOps(RingDescriptor ring, Rational bound_sq) : ring_(ring), bound_sq_(std::move(bound_sq)) {}

  Elem zero() const { return RingElement::zero(ring_); }
  Elem one() const { return RingElement::one(ring_); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  std::optional<Elem> divide(const Elem& x, const Elem& y) const {
    if (y.is_zero()) return std::nullopt;
    return divide_exact(x, y);
  }
  bool admissible(const Elem& x) const { return !x.is_zero() && norm_sq(x) <= bound_sq_; }
  Elem from(const RingElement& e) const { return e; }
  RingElement lift(const Elem& x) const { return x; }

 private:
  RingDescriptor ring_;
  Rational bound_sq_;
};

template <class Ops>
class Search {
 public:
  using Elem = typename Ops::Elem;

  Search(const Ops& ops, const std::vector<Elem>& candidates, long n)
      : ops_(ops), candidates_(candidates), n_(n), free_(n) {}

  // All solutions whose first entries are `prefix`.
  std::vector<std::vector<Elem>> run(const std::vector<Elem>& prefix) {
    found_.clear();
    State s{{ops_.one(), ops_.zero(), ops_.zero(), ops_.one()}, {}};
    seq_.clear();
    for (const Elem& c : prefix)
      if (!push(s, c)) return {};
    descend(s);
    return std::move(found_);
  }

 private:
  struct State {
    std::array<Elem, 4> P;                      // running product, row major
    std::vector<std::pair<Elem, Elem>> windows;  // (K_{k-1}, K_k) for open windows
  };

  // Appends c, updating P and the open windows; false if a window hits 0.
  bool push(State& s, const Elem& c) {
    auto& P = s.P;
    P = {ops_.add(ops_.mul(P[0], c), P[1]), ops_.sub(ops_.zero(), P[0]), ops_.add(ops_.mul(P[2], c), P[3]),
         ops_.sub(ops_.zero(), P[2])};
    std::vector<std::pair<Elem, Elem>> next;
    next.reserve(s.windows.size() + 1);
    for (const auto& [prev, cur] : s.windows) {
      Elem k = ops_.sub(ops_.mul(c, cur), prev);
      if (ops_.is_zero(k)) return false;
      next.emplace_back(cur, k);
    }
    if (ops_.is_zero(c)) return false;
    next.emplace_back(ops_.one(), c);
    // Windows that reached length n are closed.
    if (static_cast<long>(next.size()) > n_ - 1) next.erase(next.begin(), next.end() - (n_ - 1));
    s.windows = std::move(next);
    seq_.push_back(c);
    return true;
  }

  void descend(const State& s) {
    if (static_cast<long>(seq_.size()) == free_) {
      finish(s);
      return;
    }
    for (const Elem& c : candidates_) {
      State t = s;
      if (push(t, c)) {
        descend(t);
        seq_.pop_back();
      }
    }
  }

  void finish(const State& s) {
    const Elem& b = s.P[0];
    if (!ops_.admissible(b)) return;
    auto a = ops_.divide(ops_.sub(ops_.one(), s.P[1]), b);
    if (!a || !ops_.admissible(*a)) return;
    auto c = ops_.divide(ops_.add(ops_.one(), s.P[2]), b);
    if (!c || !ops_.admissible(*c)) return;
    // (ab - 1) c - a = -P22
    const Elem top = ops_.sub(ops_.mul(ops_.sub(ops_.mul(*a, b), ops_.one()), *c), *a);
    if (!ops_.is_zero(ops_.add(top, s.P[3]))) return;
    std::vector<Elem> full = seq_;
    full.push_back(*a);
    full.push_back(b);
    full.push_back(*c);
    if (nonzero_windows(full)) found_.push_back(std::move(full));
  }

  bool nonzero_windows(const std::vector<Elem>& c) const {
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
      Elem prev = ops_.zero(), cur = ops_.one();
      for (long len = 1; len <= n_; ++len) {
        Elem k = ops_.sub(ops_.mul(c[(i + static_cast<std::size_t>(len) - 1) % m], cur), prev);
        if (ops_.is_zero(k)) return false;
        prev = cur;
        cur = k;
      }
    }
    return true;
  }

  const Ops& ops_;
  const std::vector<Elem>& candidates_;
  long n_;
  long free_;
  std::vector<Elem> seq_;
  std::vector<std::vector<Elem>> found_;
};

template <class Ops>
std::vector<Cycle> run_task(const Ops& ops, RingDescriptor ring, const std::vector<RingElement>& candidates, long n,
                            const std::vector<std::size_t>& prefix) {
  std::vector<typename Ops::Elem> cand, pre;
  for (const auto& e : candidates) cand.push_back(ops.from(e));
  for (std::size_t i : prefix) pre.push_back(cand[i]);
  Search<Ops> search(ops, cand, n);
  std::vector<Cycle> out;
  for (const auto& seq : search.run(pre)) {
    std::vector<RingElement> e;
    for (const auto& x : seq) e.push_back(ops.lift(x));
    out.emplace_back(ring, std::move(e));
  }
  return out;
}

}  // namespace detail

inline std::vector<Cycle> enumerate_nonzero(RingDescriptor ring, long n, EnumerationOptions options = {}) {
  if (!ring.is_discrete()) throw error(errc::unsupported, "enumeration needs a discrete ring, got " + ring.tag());
  if (n < 1) throw error(errc::usage, "height must be at least 1");
  const std::vector<RingElement> candidates = candidate_entries(ring, n);
  const Rational bound_sq = quiddity_bound(1, n) * quiddity_bound(1, n);

  // Tasks fix the first min(2, n) entries.
  std::vector<std::vector<std::size_t>> tasks;
  const std::size_t k = candidates.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (n == 1) {
      tasks.push_back({i});
      continue;
    }
    for (std::size_t j = 0; j < k; ++j) tasks.push_back({i, j});
  }

  std::vector<std::vector<Cycle>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const detail::ExactOps exact(ring, bound_sq);
  auto worker = [&] {
    try {
      std::optional<detail::LatticeOps> lattice;
      if (!options.exact) lattice.emplace(ring, bound_sq.get_num().get_si());
      for (std::size_t t; (t = next++) < tasks.size();) {
        if (lattice) {
          try {
            results[t] = detail::run_task(*lattice, ring, candidates, n, tasks[t]);
            continue;
          } catch (const error& e) {
            if (e.code() != errc::overflow) throw;
          }
        }
        results[t] = detail::run_task(exact, ring, candidates, n, tasks[t]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Cycle> out;
  for (auto& r : results)
    for (auto& c : r) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), CycleLess{});
  return out;
}

inline EnumerationResult summarize(RingDescriptor ring, long n, const std::vector<Cycle>& cycles) {
  EnumerationResult r{ring, n, cycles.size(), 0, {}};
  for (const auto& c : cycles) r.representatives.push_back(canonical_form(c));
  std::sort(r.representatives.begin(), r.representatives.end(), CycleLess{});
  r.representatives.erase(std::unique(r.representatives.begin(), r.representatives.end()), r.representatives.end());
  r.orbit_count = r.representatives.size();
  return r;
}

inline EnumerationResult count_nonzero(RingDescriptor ring, long n, EnumerationOptions options = {}) {
  return summarize(ring, n, enumerate_nonzero(ring, n, options));
}

// (t + n - 1, 1, 2, ..., 2, 1 + 2/t, t, 2/t) with n - 2 twos; (t, 2/t, t, 2/t)
// for n = 1.
inline Cycle unit_family_cycle(const RingElement& t, long n) {
  if (n < 1) throw error(errc::usage, "height must be at least 1");
  const RingDescriptor ring = t.ring();
  auto lit = [&](long v) { return RingElement::from_integer(ring, v); };
  const RingElement u = divide(lit(2), t);
  if (n == 1) return Cycle(ring, {t, u, t, u});
  std::vector<RingElement> e{t + lit(n - 1), lit(1)};
  for (long k = 0; k < n - 2; ++k) e.push_back(lit(2));
  e.push_back(lit(1) + u);
  e.push_back(t);
  e.push_back(u);
  return Cycle(ring, std::move(e));
}

// Up to `how_many` pairs (t, cycle) over divisors t of 2, skipping the t
// whose frieze has a zero entry.
inline std::vector<std::pair<RingElement, Cycle>> unit_family(RingDescriptor ring, long n, std::size_t how_many) {
  std::vector<std::pair<RingElement, Cycle>> out;
  std::size_t limit = how_many + 2 * static_cast<std::size_t>(std::max(n, 1L)) + 2;
  std::size_t seen = 0;
  while (out.size() < how_many) {
    const std::vector<RingElement> ts = divisors_of_two(ring, limit);
    for (std::size_t k = seen; k < ts.size() && out.size() < how_many; ++k) {
      Cycle c = unit_family_cycle(ts[k], n);
      if (!is_quiddity(c)) throw invariant_violation(to_string(c) + " is not a quiddity cycle");
      if (is_nonzero(frieze_from_cycle(c))) out.emplace_back(ts[k], std::move(c));
    }
    if (ts.size() == seen || ts.size() < limit) break;
    seen = ts.size();
    limit *= 2;
  }
  return out;
}

}  // namespace quiddity
