#pragma once

// Reduction of integer epsilon-cycles and quiddity cycles to (0, 0).
//
// Every step is a short program of primitive moves on the cycle:
//
//   remove_one(k)        (.., a, 1, b, ..)  -> (.., a-1, b-1, ..)   sign +1
//   remove_minus_one(k)  (.., a, -1, b, ..) -> (.., a+1, b+1, ..)   sign -1
//   remove_zero(k)       (.., a, 0, b, ..)  -> (.., a+b, ..)        sign -1
//   negate               c -> -c                                    sign (-1)^m
//
// Each primitive's index refers to the cycle it is applied to, so a trace
// can be replayed, checked and inverted mechanically.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "quiddity/cycle.hpp"
#include "quiddity/transforms.hpp"

namespace quiddity {

enum class ReductionCase { T0, T1, T2, T3, T4, T5, I0, I1, I2, I3 };

inline std::string to_string(ReductionCase c) {
  static const char* names[] = {"T0", "T1", "T2", "T3", "T4", "T5", "I0", "I1", "I2", "I3"};
  return names[static_cast<int>(c)];
}

struct Move {
  enum Kind { remove_one, remove_minus_one, remove_zero, negate };
  Kind kind;
  long k = 0;  // 1-based position in the cycle the move is applied to; unused for negate
};

struct ReductionStep {
  ReductionCase tag;
  std::vector<long> indices;  // positions in `before` that triggered the case
  Cycle before;
  Cycle after;
  std::vector<Move> moves;
  int eps_before = -1;
  int eps_after = -1;
};

struct ReductionTrace {
  Cycle start;
  std::vector<ReductionStep> steps;
};

inline Cycle apply_move(const Cycle& c, const Move& mv) {
  switch (mv.kind) {
    case Move::remove_one: return contract_one(c, mv.k).cycle;
    case Move::remove_minus_one: return contract_minus_one(c, mv.k).cycle;
    case Move::remove_zero: return contract_zero(c, mv.k).cycle;
    case Move::negate: return negate(c);
  }
  return c;
}

inline int move_sign(const Move& mv, std::size_t length) {
  switch (mv.kind) {
    case Move::remove_one: return 1;
    case Move::remove_minus_one:
    case Move::remove_zero: return -1;
    case Move::negate: return length % 2 == 0 ? 1 : -1;
  }
  return 1;
}

namespace detail {

inline void require_integer(const Cycle& c) {
  if (c.ring().kind != RingKind::integers) throw error(errc::unsupported, "reduction works over Z only");
}

inline bool entry_is(const Cycle& c, long k, long v) { return c.at(k) == RingElement::integer(v); }

inline long cyclic_distance(long j, long k, long m) {
  long d = ((k - j) % m + m) % m;
  return std::min(d, m - d);
}

// Removes the entries at original positions j and k (both equal to `value`,
// cyclic distance >= 2), applying the second move at the shifted position.
inline std::vector<Move> double_removal(const Cycle& c, long j, long k, Move::Kind kind) {
  // Original positions of the surviving slots after the first move.
  std::vector<long> origin;
  for (long p = 1; p <= static_cast<long>(c.size()); ++p) origin.push_back(p);
  std::vector<std::size_t> erased{c.slot(j)};
  if (kind == Move::remove_zero) erased.push_back(c.slot(j - 1));
  std::sort(erased.rbegin(), erased.rend());
  for (std::size_t s : erased) origin.erase(origin.begin() + static_cast<long>(s));
  auto it = std::find(origin.begin(), origin.end(), k);
  if (it == origin.end()) throw invariant_violation("second removal position was consumed by the first");
  return {{kind, j}, {kind, static_cast<long>(it - origin.begin()) + 1}};
}

inline ReductionStep run_step(ReductionCase tag, std::vector<long> indices, const Cycle& before, std::vector<Move> moves,
                              int eps_before) {
  Cycle cur = before;
  int eps = eps_before;
  for (const Move& mv : moves) {
    eps *= move_sign(mv, cur.size());
    cur = apply_move(cur, mv);
  }
  return {tag, std::move(indices), before, cur, std::move(moves), eps_before, eps};
}

}  // namespace detail

// One step for an epsilon-cycle over Z: cases I0 > I1 > I2 > I3, smallest k.
inline ReductionStep reduce_step_epsilon(const Cycle& cycle, int eps) {
  detail::require_integer(cycle);
  if (!is_epsilon_cycle(cycle, eps))
    throw error(errc::invalid_cycle, to_string(cycle) + " is not a " + std::to_string(eps) + "-cycle");
  const long m = static_cast<long>(cycle.size());
  if (m == 2) return {ReductionCase::I0, {}, cycle, cycle, {}, eps, eps};
  for (auto [value, tag, kind] : {std::tuple{1L, ReductionCase::I1, Move::remove_one},
                                  std::tuple{0L, ReductionCase::I2, Move::remove_zero},
                                  std::tuple{-1L, ReductionCase::I3, Move::remove_minus_one}}) {
    for (long k = 1; k <= m; ++k)
      if (detail::entry_is(cycle, k, value)) return detail::run_step(tag, {k}, cycle, {{kind, k}}, eps);
  }
  throw invariant_violation("no reduction case applies to " + to_string(cycle));
}

// One step for a quiddity cycle over Z: cases T0 > T1 > ... > T5, smallest
// indices. T0 is terminal and leaves the cycle unchanged.
inline ReductionStep reduce_step_Z(const Cycle& cycle) {
  detail::require_integer(cycle);
  if (!is_quiddity(cycle)) throw error(errc::invalid_cycle, to_string(cycle) + " is not a quiddity cycle");
  const long m = static_cast<long>(cycle.size());
  if (m < 4) return {ReductionCase::T0, {}, cycle, cycle, {}, -1, -1};

  auto find_all = [&](long v) {
    std::vector<long> out;
    for (long k = 1; k <= m; ++k)
      if (detail::entry_is(cycle, k, v)) out.push_back(k);
    return out;
  };
  const auto ones = find_all(1);
  const auto zeros = find_all(0);
  const auto minus = find_all(-1);

  ReductionStep step;
  if (!ones.empty()) {
    long k = ones.front();
    step = detail::run_step(ReductionCase::T1, {k}, cycle, {{Move::remove_one, k}}, -1);
  } else if (m % 2 == 1 && !zeros.empty()) {
    long k = zeros.front();
    step = detail::run_step(ReductionCase::T2, {k}, cycle, {{Move::remove_zero, k}, {Move::negate, 0}}, -1);
  } else if (m % 2 == 0 && !minus.empty()) {
    long k = minus.front();
    step = detail::run_step(ReductionCase::T3, {k}, cycle, {{Move::remove_minus_one, k}, {Move::negate, 0}}, -1);
  } else {
    auto pair_case = [&](const std::vector<long>& pos, ReductionCase tag, Move::Kind kind) -> std::optional<ReductionStep> {
      for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b)
          if (detail::cyclic_distance(pos[a], pos[b], m) >= 2)
            return detail::run_step(tag, {pos[a], pos[b]}, cycle, detail::double_removal(cycle, pos[a], pos[b], kind), -1);
      return std::nullopt;
    };
    auto t4 = pair_case(zeros, ReductionCase::T4, Move::remove_zero);
    auto t5 = t4 ? t4 : pair_case(minus, ReductionCase::T5, Move::remove_minus_one);
    if (!t5) throw invariant_violation("no reduction case applies to " + to_string(cycle));
    step = *t5;
  }
  if (!is_quiddity(step.after))
    throw invariant_violation(to_string(step.tag) + " on " + to_string(cycle) + " gave " + to_string(step.after));
  return step;
}

// Repeats reduce_step_Z down to (0, 0); (1, 1, 1) is finished with T1.
inline ReductionTrace reduce_to_base(const Cycle& cycle) {
  ReductionTrace trace{cycle, {}};
  Cycle cur = cycle;
  while (cur.size() != 2) {
    ReductionStep step = reduce_step_Z(cur);
    if (step.tag == ReductionCase::T0) step = detail::run_step(ReductionCase::T1, {1}, cur, {{Move::remove_one, 1}}, -1);
    if (step.after.size() >= cur.size()) throw invariant_violation("reduction did not shrink " + to_string(cur));
    cur = step.after;
    trace.steps.push_back(std::move(step));
  }
  if (!all_zero(cur)) throw invariant_violation("reduction ended at " + to_string(cur));
  return trace;
}

// Replays every move of every step and checks the recorded cycles and the
// quiddity property of each intermediate.
inline bool certify(const ReductionTrace& trace) {
  Cycle cur = trace.start;
  for (const auto& step : trace.steps) {
    if (!(step.before == cur)) return false;
    int eps = step.eps_before;
    if (!is_epsilon_cycle(cur, eps)) return false;
    for (const Move& mv : step.moves) {
      eps *= move_sign(mv, cur.size());
      cur = apply_move(cur, mv);
      if (!is_epsilon_cycle(cur, eps)) return false;
    }
    if (!(step.after == cur) || eps != step.eps_after) return false;
  }
  return true;
}

// Inverse of one move as a gluing onto a labelled polygon: the polygon
// grows to `size` vertices, the vertices in `inserted` are new, the old
// vertices keep their order in the remaining slots, and `triangles` are
// added with their labels. A negation flips every label instead.
struct GlueInstruction {
  enum Kind { triangle_plus, triangle_minus, square, negate };
  Kind kind;
  long size = 0;
  std::vector<long> inserted;
  struct Piece {
    std::array<long, 3> vertices;
    Integer label;
  };
  std::vector<Piece> pieces;
};

// Gluing instructions grouped by reduction step, in replay order (the last
// step of the trace first).
inline std::vector<std::vector<GlueInstruction>> invert_trace(const ReductionTrace& trace) {
  std::vector<std::vector<GlueInstruction>> out;
  for (auto step = trace.steps.rbegin(); step != trace.steps.rend(); ++step) {
    // Cycles before each move of this step.
    std::vector<Cycle> stages{step->before};
    for (const Move& mv : step->moves) stages.push_back(apply_move(stages.back(), mv));
    std::vector<GlueInstruction> group;
    for (std::size_t idx = step->moves.size(); idx-- > 0;) {
      const Move& mv = step->moves[idx];
      const Cycle& c = stages[idx];
      const long m = static_cast<long>(c.size());
      auto pos = [&](long k) { return static_cast<long>(c.slot(k)) + 1; };
      GlueInstruction g;
      g.size = m;
      switch (mv.kind) {
        case Move::remove_one:
        case Move::remove_minus_one: {
          const bool plus = mv.kind == Move::remove_one;
          g.kind = plus ? GlueInstruction::triangle_plus : GlueInstruction::triangle_minus;
          g.inserted = {pos(mv.k)};
          g.pieces.push_back({{pos(mv.k - 1), pos(mv.k), pos(mv.k + 1)}, Integer(plus ? 1 : -1)});
          break;
        }
        case Move::remove_zero: {
          // (.., p, a, 0, b, ..): square on p, a, 0, b split along (p, 0).
          g.kind = GlueInstruction::square;
          g.inserted = {pos(mv.k - 1), pos(mv.k)};
          std::sort(g.inserted.begin(), g.inserted.end());
          const Integer a = c.at(mv.k - 1).coords()[0].get_num();
          g.pieces.push_back({{pos(mv.k - 2), pos(mv.k - 1), pos(mv.k)}, a});
          g.pieces.push_back({{pos(mv.k - 2), pos(mv.k), pos(mv.k + 1)}, Integer(-a)});
          break;
        }
        case Move::negate: g.kind = GlueInstruction::negate; break;
      }
      group.push_back(std::move(g));
    }
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace quiddity
