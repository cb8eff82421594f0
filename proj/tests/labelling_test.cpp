#include <map>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace quiddity;
using namespace testutil;

Labelling lab(long m, std::vector<Diagonal> d, std::vector<long> labels) {
  Triangulation t(m, std::move(d));
  std::vector<Integer> l(labels.begin(), labels.end());
  return Labelling(t, l);
}

Labelling from_pieces(long m, std::vector<std::pair<Triangle, long>> pieces) {
  std::vector<std::pair<Triangle, Integer>> p;
  for (auto& [t, v] : pieces) p.emplace_back(t, Integer(v));
  return Labelling::from_triangles(m, p);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(lab(4, {{1, 3}}, {1, 1})));
  for (long c = 1; c <= 4; ++c) EXPECT_FALSE(is_admissible(lab(4, {{1, 3}}, {c, -c})));
  EXPECT_FALSE(is_admissible(lab(4, {{1, 3}}, {0, 0})));  // d = 1
  EXPECT_TRUE(is_admissible(lab(5, {{1, 3}, {1, 4}}, {1, 1, 1})));
  EXPECT_FALSE(is_admissible(lab(5, {{1, 3}, {1, 4}}, {-1, -1, -1})));
  EXPECT_FALSE(is_admissible(lab(5, {{1, 3}, {1, 4}}, {1, 5, 1})));
  EXPECT_TRUE(is_admissible(lab(4, {{1, 3}}, {-1, -1})));
  // Two squares: d = 2.
  EXPECT_TRUE(is_admissible(lab(6, {{1, 3}, {1, 4}, {1, 5}}, {3, -3, 2, -2})));
  // Labels 5 and -5 that do not share a side.
  EXPECT_FALSE(is_admissible(lab(6, {{1, 3}, {1, 4}, {1, 5}}, {5, -1, -5, 1})));
  EXPECT_TRUE(is_admissible(Labelling(Triangulation(2, {}), {})));
}

TEST(CycleFromLabelling, Examples) {
  EXPECT_EQ(cycle_from_labelling(lab(4, {{1, 3}}, {1, 1})), cz({2, 1, 2, 1}));
  EXPECT_EQ(cycle_from_labelling(lab(4, {{1, 3}}, {-1, -1})), cz({-2, -1, -2, -1}));
  EXPECT_EQ(cycle_from_labelling(lab(6, {{1, 3}, {3, 6}, {3, 5}}, {1, 1, 1, 1})), cz({2, 1, 4, 1, 2, 2}));
  EXPECT_EQ(cycle_from_labelling(Labelling(Triangulation(2, {}), {})), cz({0, 0}));
  EXPECT_THROW(cycle_from_labelling(lab(4, {{1, 3}}, {2, -2})), error);
  EXPECT_THROW(Labelling(Triangulation(4, {{1, 3}}), {1}), error);
}

// The two hexagon labellings drawn for the family (1, 1, -a, -1, -1, a).
Labelling hexagon_left(long a) {
  return from_pieces(6, {{{1, 5, 6}, a}, {{1, 2, 3}, 1}, {{3, 4, 5}, -1}, {{1, 3, 5}, -a}});
}
Labelling hexagon_right(long a) {
  return from_pieces(6, {{{1, 2, 6}, 1}, {{2, 5, 6}, a - 1}, {{2, 3, 5}, 1 - a}, {{3, 4, 5}, -1}});
}

TEST(CycleFromLabelling, HexagonFamilyTwoLabellings) {
  for (long a = -4; a <= 6; ++a) {
    Cycle expect = cz({1, 1, -a, -1, -1, a});
    Labelling l = hexagon_left(a), r = hexagon_right(a);
    EXPECT_TRUE(is_admissible(l)) << a;
    EXPECT_TRUE(is_admissible(r)) << a;
    EXPECT_EQ(cycle_from_labelling(l), expect);
    EXPECT_EQ(cycle_from_labelling(r), expect);
    EXPECT_FALSE(l.triangulation() == r.triangulation());
  }
}

TEST(LabellingFromCycle, Examples) {
  Labelling base = labelling_from_cycle(cz({0, 0}));
  EXPECT_EQ(base.m(), 2);
  EXPECT_TRUE(base.labels().empty());

  Labelling tri = labelling_from_cycle(cz({1, 1, 1}));
  EXPECT_EQ(tri.m(), 3);
  ASSERT_EQ(tri.labels().size(), 1u);
  EXPECT_EQ(tri.labels()[0], 1);

  Labelling r = labelling_from_cycle(cz({1, 1, -5, -1, -1, 5}));
  EXPECT_TRUE(is_admissible(r));
  EXPECT_EQ(cycle_from_labelling(r), cz({1, 1, -5, -1, -1, 5}));

  EXPECT_THROW(labelling_from_cycle(cz({1, 2, 3})), error);
}

void expect_round_trip(const Cycle& c) {
  Labelling l = labelling_from_cycle(c);
  ASSERT_TRUE(is_admissible(l)) << c;
  EXPECT_EQ(cycle_from_labelling(l), c);
}

TEST(LabellingFromCycle, RoundTripFamilies) {
  for (long a = -3; a <= 3; ++a) {
    expect_round_trip(cz({1, 1, -a, -1, -1, a}));
    for (long b = -3; b <= 3; ++b) expect_round_trip(cz({a, 0, b, 0, -a - b, 0}));
  }
}

TEST(LabellingFromCycle, RoundTripBox) {
  long total = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    const long bound = m <= 6 ? 4 : 3;
    for (const auto& seq : oracle::integer_quiddity_box(bound, m)) {
      expect_round_trip(cz(seq));
      ++total;
    }
  }
  EXPECT_GT(total, 1000);
}

// Random labellings with a square partition: pair up neighbouring triangles
// at random, label pairs (c, -c) and the rest +-1.
Labelling random_partitioned(long m, std::mt19937_64& rng) {
  const auto& all = *enumerate_triangulations(m);
  const Triangulation& t = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  const auto& tris = t.triangles();
  std::vector<Integer> labels(tris.size());
  std::vector<bool> used(tris.size(), false);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> value(-4, 4);
  for (std::size_t x = 0; x < tris.size(); ++x) {
    if (used[x]) continue;
    used[x] = true;
    if (coin(rng)) {
      for (std::size_t y = x + 1; y < tris.size(); ++y) {
        int common = 0;
        for (long v : tris[x]) common += std::count(tris[y].begin(), tris[y].end(), v) ? 1 : 0;
        if (used[y] || common != 2) continue;
        used[y] = true;
        const long c = value(rng);
        labels[x] = c;
        labels[y] = -c;
        goto next;
      }
    }
    labels[x] = coin(rng) ? 1 : -1;
  next:;
  }
  return Labelling(t, labels);
}

// With a square partition, d is an integer, and the vertex sums form an
// epsilon-cycle with epsilon = -(-1)^d.
TEST(SignBookkeeping, RandomPartitionedLabellings) {
  std::mt19937_64 rng(5);
  int odd = 0, even = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Labelling l = random_partitioned(std::uniform_int_distribution<long>(3, 9)(rng), rng);
    ASSERT_TRUE(has_square_partition(l));
    const long d2 = twice_d(l);
    ASSERT_EQ(d2 % 2, 0);
    Cycle c = vertex_sums(l);
    if ((d2 / 2) % 2 == 0) {
      ++even;
      EXPECT_TRUE(is_admissible(l));
      EXPECT_TRUE(is_quiddity(c));
    } else {
      ++odd;
      EXPECT_FALSE(is_admissible(l));
      EXPECT_TRUE(is_epsilon_cycle(c, 1));
    }
  }
  EXPECT_GT(odd, 100);
  EXPECT_GT(even, 100);
}

TEST(ReduceLabelling, Examples) {
  auto t0 = reduce_labelling_step(lab(3, {}, {1}));
  EXPECT_EQ(t0.tag, LabellingCase::TC0);

  auto t1 = reduce_labelling_step(lab(4, {{1, 3}}, {1, 1}));
  EXPECT_EQ(t1.tag, LabellingCase::TC1);
  EXPECT_EQ(t1.result, lab(3, {}, {1}));

  auto t3 = reduce_labelling_step(lab(4, {{1, 3}}, {-1, -1}));
  EXPECT_EQ(t3.tag, LabellingCase::TC3);
  EXPECT_EQ(t3.result, lab(3, {}, {1}));

  // Odd m with a square on 1..4 and an ear -1.
  auto t2 = reduce_labelling_step(from_pieces(5, {{{1, 2, 3}, 2}, {{1, 3, 4}, -2}, {{1, 4, 5}, -1}}));
  EXPECT_EQ(t2.tag, LabellingCase::TC2);
  EXPECT_EQ(t2.result, lab(3, {}, {1}));

  EXPECT_THROW(reduce_labelling_step(lab(4, {{1, 3}}, {2, -2})), error);
}

// Reduce to TC0, checking each step: the result is admissible, and for
// triangle removals the new cycle is the matching contraction of the old.
void reduce_fully(const Labelling& start, std::map<LabellingCase, int>& seen) {
  Labelling cur = start;
  for (int guard = 0; guard < 64; ++guard) {
    const Cycle before = cycle_from_labelling(cur);
    LabellingStep step = reduce_labelling_step(cur);
    ++seen[step.tag];
    if (step.tag == LabellingCase::TC0) {
      EXPECT_LT(cur.m(), 4);
      EXPECT_TRUE(cur.labels().empty() || (cur.labels().size() == 1 && cur.labels()[0] == 1));
      return;
    }
    ASSERT_TRUE(is_admissible(step.result));
    const Cycle after = cycle_from_labelling(step.result);
    if (step.tag == LabellingCase::TC1) {
      EXPECT_EQ(after, contract_one(before, step.indices[0]).cycle);
    } else if (step.tag == LabellingCase::TC3) {
      EXPECT_EQ(after, negate(contract_minus_one(before, step.indices[0]).cycle));
    }
    EXPECT_LT(step.result.m(), cur.m());
    cur = step.result;
  }
  FAIL() << "reduction did not terminate";
}

TEST(ReduceLabelling, RandomAdmissible) {
  std::mt19937_64 rng(6);
  std::map<LabellingCase, int> seen;
  int done = 0;
  while (done < 2000) {
    Labelling l = random_partitioned(std::uniform_int_distribution<long>(3, 10)(rng), rng);
    if (!is_admissible(l)) continue;
    reduce_fully(l, seen);
    ++done;
  }
  for (auto tag : {LabellingCase::TC0, LabellingCase::TC1, LabellingCase::TC2, LabellingCase::TC3, LabellingCase::TC4,
                   LabellingCase::TC5})
    EXPECT_GT(seen[tag], 0) << to_string(tag);
}

TEST(ReduceLabelling, ConstructedLabellings) {
  std::map<LabellingCase, int> seen;
  for (std::size_t m = 3; m <= 7; ++m)
    for (const auto& seq : oracle::integer_quiddity_box(3, m)) reduce_fully(labelling_from_cycle(cz(seq)), seen);
  for (long a = -3; a <= 6; ++a) {
    reduce_fully(hexagon_left(a), seen);
    reduce_fully(hexagon_right(a), seen);
  }
}

}  // namespace
