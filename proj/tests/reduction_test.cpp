#include <map>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace quiddity;
using namespace testutil;

TEST(ReduceEpsilon, Examples) {
  auto s0 = reduce_step_epsilon(cz({0, 0}), -1);
  EXPECT_EQ(s0.tag, ReductionCase::I0);
  EXPECT_EQ(s0.after, cz({0, 0}));

  auto s1 = reduce_step_epsilon(cz({1, 1, 1}), -1);
  EXPECT_EQ(s1.tag, ReductionCase::I1);
  EXPECT_EQ(s1.indices, std::vector<long>{1});
  EXPECT_EQ(s1.after, cz({0, 0}));
  EXPECT_EQ(s1.eps_after, -1);

  auto s3 = reduce_step_epsilon(cz({-1, -1, -1}), 1);
  EXPECT_EQ(s3.tag, ReductionCase::I3);
  EXPECT_EQ(s3.after, cz({0, 0}));
  EXPECT_EQ(s3.eps_after, -1);

  auto s2 = reduce_step_epsilon(cz({2, 0, -2, 0}), 1);
  EXPECT_EQ(s2.tag, ReductionCase::I2);
  EXPECT_TRUE(is_epsilon_cycle(s2.after, s2.eps_after));
  EXPECT_EQ(s2.eps_after, -1);

  EXPECT_THROW(reduce_step_epsilon(cz({1, 1, 1}), 1), error);
}

// Epsilon-cycles reduce to (0, 0) by repeated I-steps.
TEST(ReduceEpsilon, ExhaustiveSmall) {
  for (std::size_t m = 2; m <= 6; ++m) {
    std::vector<oracle::Int> alphabet;
    for (long v = -2; v <= 2; ++v) alphabet.push_back({v});
    std::vector<std::size_t> idx(m, 0);
    int seen = 0;
    while (true) {
      std::vector<long> seq;
      for (auto i : idx) seq.push_back(alphabet[i].v);
      Cycle c = cz(seq);
      for (int eps : {-1, 1}) {
        if (!is_epsilon_cycle(c, eps)) continue;
        ++seen;
        Cycle cur = c;
        int e = eps;
        while (cur.size() > 2) {
          auto step = reduce_step_epsilon(cur, e);
          ASSERT_LT(step.after.size(), cur.size());
          ASSERT_TRUE(is_epsilon_cycle(step.after, step.eps_after));
          cur = step.after;
          e = step.eps_after;
        }
        EXPECT_TRUE(all_zero(cur));
        EXPECT_EQ(e, -1);
      }
      std::size_t k = 0;
      while (k < m && ++idx[k] == alphabet.size()) idx[k++] = 0;
      if (k == m) break;
    }
    EXPECT_GT(seen, 0);
  }
}

TEST(ReduceZ, Examples) {
  EXPECT_EQ(reduce_step_Z(cz({1, 1, 1})).tag, ReductionCase::T0);
  EXPECT_EQ(reduce_step_Z(cz({0, 0})).tag, ReductionCase::T0);

  auto h = reduce_step_Z(cz({1, 4, 1, 2, 2, 2}));
  EXPECT_EQ(h.tag, ReductionCase::T1);
  EXPECT_EQ(h.indices, std::vector<long>{1});
  EXPECT_EQ(h.after, cz({3, 1, 2, 2, 1}));

  auto z = reduce_step_Z(cz({1, 0, 1, 0, -2, 0}));
  EXPECT_EQ(z.tag, ReductionCase::T1);
  EXPECT_EQ(z.after, cz({-1, 1, 0, -2, -1}));
  EXPECT_TRUE(is_quiddity(z.after));

  auto n = reduce_step_Z(cz({-2, -1, -2, -1}));
  EXPECT_EQ(n.tag, ReductionCase::T3);
  EXPECT_EQ(n.indices, std::vector<long>{2});
  EXPECT_EQ(n.after, cz({1, 1, 1}));

  EXPECT_THROW(reduce_step_Z(cz({1, 2, 3})), error);
  EXPECT_THROW(reduce_step_Z(czi({{0, 0}, {0, 0}})), error);
}

TEST(ReduceZ, FixtureCases) {
  EXPECT_EQ(reduce_step_Z(cz({-1, -1, 0, 0, -1})).tag, ReductionCase::T2);
  EXPECT_EQ(reduce_step_Z(cz({0, -4, -5, 0, 4, 2, 0, -3, 3})).tag, ReductionCase::T2);
  EXPECT_EQ(reduce_step_Z(cz({-1, 2, -3, -1, -1, 2, -3, -1})).tag, ReductionCase::T3);
  auto t4 = reduce_step_Z(cz({0, 2, -2, 0, 2, -2}));
  EXPECT_EQ(t4.tag, ReductionCase::T4);
  EXPECT_EQ(t4.indices, (std::vector<long>{1, 4}));
  EXPECT_EQ(t4.after.size(), 2u);
}

// Zeros at cyclic distance 2: the merged entry collects three values.
TEST(ReduceZ, AdjacentZerosMerge) {
  // (a, 0, b, 0, c, 0) with m even, no 1 and no -1: T4 at positions 2, 4.
  auto s = reduce_step_Z(cz({2, 0, 3, 0, -5, 0}));
  EXPECT_EQ(s.tag, ReductionCase::T4);
  EXPECT_EQ(s.indices, (std::vector<long>{2, 4}));
  // 2 + 3 + (-5) in one slot, the last zero in the other.
  EXPECT_EQ(s.after, cz({0, 0}));
  auto t = reduce_step_Z(cz({0, 2, 0, 3, 0, -5}));
  EXPECT_EQ(t.tag, ReductionCase::T4);
  EXPECT_EQ(t.indices, (std::vector<long>{1, 3}));
  EXPECT_EQ(t.after, cz({0, 0}));
}

TEST(ReduceToBase, Examples) {
  auto h = reduce_to_base(cz({1, 4, 1, 2, 2, 2}));
  EXPECT_EQ(h.steps.size(), 4u);
  EXPECT_EQ(h.steps.back().after, cz({0, 0}));
  EXPECT_TRUE(certify(h));

  auto s = reduce_to_base(cz({2, 1, 2, 1}));
  ASSERT_EQ(s.steps.size(), 2u);
  EXPECT_EQ(s.steps[0].after, cz({1, 1, 1}));
  EXPECT_EQ(s.steps[1].after, cz({0, 0}));

  auto r = reduce_to_base(cz({1, 1, -5, -1, -1, 5}));
  EXPECT_TRUE(all_zero(r.steps.back().after));
  EXPECT_TRUE(certify(r));

  EXPECT_TRUE(reduce_to_base(cz({0, 0})).steps.empty());
}

TEST(Certify, DetectsTampering) {
  auto t = reduce_to_base(cz({1, 4, 1, 2, 2, 2}));
  t.steps[1].after = cz({1, 1, 1, 1});
  EXPECT_FALSE(certify(t));
  auto u = reduce_to_base(cz({-2, -1, -2, -1}));
  u.steps[0].moves.pop_back();  // drop the negation
  EXPECT_FALSE(certify(u));
}

TEST(InvertTrace, Examples) {
  auto one = invert_trace(reduce_to_base(cz({1, 1, 1})));
  ASSERT_EQ(one.size(), 1u);
  ASSERT_EQ(one[0].size(), 1u);
  EXPECT_EQ(one[0][0].kind, GlueInstruction::triangle_plus);
  EXPECT_EQ(one[0][0].size, 3);

  auto two = invert_trace(reduce_to_base(cz({2, 1, 2, 1})));
  ASSERT_EQ(two.size(), 2u);
  for (const auto& g : two) {
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].kind, GlueInstruction::triangle_plus);
  }
  EXPECT_EQ(two[1][0].size, 4);

  auto neg = invert_trace(reduce_to_base(cz({-2, -1, -2, -1})));
  bool minus = false, negation = false;
  for (const auto& g : neg)
    for (const auto& ins : g) {
      minus |= ins.kind == GlueInstruction::triangle_minus;
      negation |= ins.kind == GlueInstruction::negate;
    }
  EXPECT_TRUE(minus);
  EXPECT_TRUE(negation);
}

// Every integer quiddity cycle in a box reduces to (0, 0) in at most m
// steps with a certified trace. Each case shrinks the cycle by its
// expected amount and T2 / T3 only occur for odd / even length.
TEST(ReduceToBase, ExhaustiveBox) {
  std::map<ReductionCase, long> drop = {{ReductionCase::T1, 1}, {ReductionCase::T2, 2}, {ReductionCase::T3, 1},
                                        {ReductionCase::T4, 4}, {ReductionCase::T5, 2}};
  std::map<ReductionCase, int> seen;
  long total = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    const long bound = m <= 6 ? 4 : 3;
    for (const auto& seq : oracle::integer_quiddity_box(bound, m)) {
      Cycle c = cz(seq);
      ++total;
      ReductionTrace t = reduce_to_base(c);
      ASSERT_TRUE(certify(t)) << c;
      EXPECT_LE(t.steps.size(), m);
      for (const auto& s : t.steps) {
        ++seen[s.tag];
        EXPECT_EQ(static_cast<long>(s.before.size() - s.after.size()), drop[s.tag]) << s.before;
        if (s.tag == ReductionCase::T2 || s.tag == ReductionCase::T3) {
          EXPECT_EQ(s.before.size() % 2, s.tag == ReductionCase::T2 ? 1u : 0u);
        }
      }
    }
  }
  EXPECT_GT(total, 1000);
  for (auto tag : {ReductionCase::T1, ReductionCase::T2, ReductionCase::T3, ReductionCase::T4, ReductionCase::T5})
    EXPECT_GT(seen[tag], 0) << to_string(tag);
}

}  // namespace
