#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

namespace {

using namespace quiddity;
using namespace testutil;

Matrix signed_product(const Cycle& c, int sign) {
  Matrix p = full_product(c);
  return sign == 1 ? p : -p;
}

class RandomEntries {
 public:
  explicit RandomEntries(unsigned seed) : rng_(seed) {}

  RingElement q() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Q(num(rng_), den(rng_));
  }
  RingElement qi() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Qi(Rational(num(rng_), den(rng_)), Rational(num(rng_), den(rng_)));
  }
  RingElement pick(bool gaussian) { return gaussian ? qi() : q(); }

  Cycle cycle(bool gaussian, long m) {
    std::vector<RingElement> e;
    for (long k = 0; k < m; ++k) e.push_back(pick(gaussian));
    return Cycle(e.front().ring(), e);
  }

  long index(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

Cycle with_entry(const Cycle& c, long k, const RingElement& v) {
  auto e = c.entries();
  e[c.slot(k)] = v;
  return Cycle(c.ring(), e);
}

TEST(Transforms, OneRules) {
  auto r = contract_one(cz({1, 1, 1}), 2);
  EXPECT_EQ(r.cycle, cz({0, 0}));
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(expand_one(cz({0, 0}), 1).cycle, cz({1, 1, 1}));
  auto h = contract_one(cz({1, 4, 1, 2, 2, 2}), 1);
  EXPECT_EQ(h.cycle, cz({3, 1, 2, 2, 1}));
  EXPECT_TRUE(is_quiddity(h.cycle));
}

TEST(Transforms, MinusOneRules) {
  auto r = contract_minus_one(cz({-2, -1, -2, -1}), 2);
  EXPECT_EQ(r.cycle, cz({-1, -1, -1}));
  EXPECT_EQ(r.sign, -1);
  EXPECT_TRUE(is_epsilon_cycle(r.cycle, 1));
  auto e = expand_minus_one(cz({0, 0}), 1);
  EXPECT_EQ(e.cycle, cz({-1, -1, -1}));
  EXPECT_EQ(e.sign, -1);
  EXPECT_THROW(contract_minus_one(cz({1, 1, 1}), 1), error);
  try {
    contract_minus_one(cz({1, 1, 1}), 1);
  } catch (const error& err) {
    EXPECT_EQ(err.code(), errc::rule_not_applicable);
  }
}

TEST(Transforms, ContractUV) {
  Cycle c = cq({0, 3, 1, 0});
  EXPECT_EQ(contract_uv(c, 2), cq({0, 2, -1}));
  EXPECT_EQ(eta(Q(0)) * eta(Q(3)) * eta(Q(1)) * eta(Q(0)), eta(Q(0)) * eta(Q(2)) * eta(Q(-1)));
  try {
    contract_uv(cq({0, 1, 1, 0}), 2);
    FAIL();
  } catch (const error& err) {
    EXPECT_EQ(err.code(), errc::singular);
  }
  // Over Z with uv - 1 = +-1 the fractions always divide.
  EXPECT_NO_THROW(contract_uv(cz({5, 2, 1, 7}), 2));
  EXPECT_NO_THROW(contract_uv(cz({5, 0, 3, 7}), 2));
  try {
    contract_uv(cz({0, 3, 3, 0}), 2);
    FAIL();
  } catch (const error& err) {
    EXPECT_EQ(err.code(), errc::not_representable);
  }
}

TEST(Transforms, RescaleLambda) {
  Cycle c = cq({0, 3, 1, 0});
  EXPECT_EQ(rescale_lambda(c, 2, Q(1)), c);
  Cycle r = rescale_lambda(c, 2, Q(2));
  EXPECT_EQ(r, cq({Rational(-1, 4), 6, Rational(1, 2), Rational(3, 2)}));
  EXPECT_EQ(full_product(r), full_product(c));
  RingDescriptor qi = RingDescriptor::gaussian_rationals();
  Cycle g(qi, {Qi(0, 0), Qi(1, 1), Qi(1, -1), Qi(0, 0)});
  Cycle gr = rescale_lambda(g, 2, Qi(0, 1));
  EXPECT_EQ(full_product(gr), full_product(g));
  EXPECT_THROW(rescale_lambda(c, 2, Q(0)), error);
}

TEST(Transforms, ZeroRules) {
  auto r = contract_zero(cz({1, 0, 1, 0, -2, 0}), 2);
  EXPECT_EQ(r.cycle, cz({2, 0, -2, 0}));
  EXPECT_EQ(r.sign, -1);
  EXPECT_TRUE(is_epsilon_cycle(r.cycle, 1));
  Cycle s = shift_zero(cz({1, 0, 1, 0, -2, 0}), 2, Z(5));
  EXPECT_EQ(s, cz({6, 0, -4, 0, -2, 0}));
  EXPECT_TRUE(is_quiddity(s));
  EXPECT_THROW(contract_zero(cz({1, 1, 1}), 1), error);
}

TEST(Transforms, ConjugateDiag) {
  auto same = conjugate_diag(Q(3), Q(5), Q(-2), Q(1));
  EXPECT_EQ(same[0], Q(3));
  EXPECT_EQ(same[2], Q(-2));
  auto w = conjugate_diag(Q(0), Q(2), Q(0), Q(2));
  EXPECT_EQ(w[0], Q(3, 8));
  EXPECT_EQ(w[1], Q(2));
  EXPECT_EQ(w[2], Q(-3, 2));
  Matrix lhs = Matrix::diag(Q(1, 2), Q(2)) * eta(Q(0)) * eta(Q(2)) * eta(Q(0)) * Matrix::diag(Q(2), Q(1, 2));
  EXPECT_EQ(lhs, eta(w[0]) * eta(w[1]) * eta(w[2]));
  EXPECT_THROW(conjugate_diag(Q(0), Q(0), Q(0), Q(2)), error);
  EXPECT_THROW(conjugate_diag(Q(0), Q(1), Q(0), Q(0)), error);
}

TEST(Transforms, ScaleAlternating) {
  EXPECT_EQ(scale_alternating(cz({2, 1, 2, 1}), Z(1)), cz({2, 1, 2, 1}));
  Cycle q = scale_alternating(cq({2, 1, 2, 1}), Q(1, 2));
  EXPECT_EQ(q, cq({1, 2, 1, 2}));
  EXPECT_TRUE(is_quiddity(q));
  EXPECT_THROW(scale_alternating(cz({1, 1, 1}), Z(1)), error);
  EXPECT_THROW(scale_alternating(cq({2, 1, 2, 1}), Q(0)), error);
  // Over Z only units keep entries integral.
  EXPECT_THROW(scale_alternating(cz({2, 1, 2, 1}), Z(2)), error);
}

// The frieze of the scaled cycle differs entrywise by factors t or 1/t, and
// has its zeros in the same places.
TEST(Transforms, ScaleAlternatingFriezeEntries) {
  RingDescriptor qi = RingDescriptor::gaussian_rationals();
  std::vector<Cycle> inputs = {
      Cycle(qi, {Qi(1, -1), Qi(1, 1), Qi(2, 0), Qi(1, -1), Qi(1, 1), Qi(2, 0)}),
      Cycle(qi, {Qi(1, 0), Qi(0, 0), Qi(1, 0), Qi(0, 0), Qi(-2, 0), Qi(0, 0)}),
      Cycle(qi, {Qi(-1, 0), Qi(3, 0), Qi(0, 0), Qi(-2, 0), Qi(2, 0), Qi(1, 0), Qi(3, 0), Qi(0, 0)})};
  for (const Cycle& c : inputs)
    for (const RingElement& t : {Qi(1, 1), Qi(Rational(1, 3), 0), Qi(2, -5)}) {
      Cycle s = scale_alternating(c, t);
      ASSERT_TRUE(is_quiddity(s));
      FriezePattern f = frieze_from_cycle(c), g = frieze_from_cycle(s);
      EXPECT_EQ(zero_positions(f), zero_positions(g));
      for (long i = 1; i <= f.period(); ++i)
        for (long j = i; j <= i + f.period(); ++j) {
          const RingElement& e = f.entry(i, j);
          const RingElement& x = g.entry(i, j);
          EXPECT_TRUE(x == e || x == t * e || x == divide(e, t)) << i << "," << j;
        }
    }
}

// 500 random applications per rule over Q and Q(i): the product identity
// holds exactly for windows inside 1..m, and wrapping windows still map
// epsilon-cycles to epsilon-cycles.
class RandomRules : public ::testing::TestWithParam<bool> {};

TEST_P(RandomRules, ProductIdentities) {
  const bool gaussian = GetParam();
  RandomEntries gen(gaussian ? 11 : 12);
  for (int trial = 0; trial < 500; ++trial) {
    const long m = gen.index(4, 8);
    Cycle c = gen.cycle(gaussian, m);
    const RingElement one = RingElement::one(c.ring());
    const RingElement zero = RingElement::zero(c.ring());

    long k = gen.index(1, m - 1);
    auto ex = expand_one(c, k);
    EXPECT_EQ(full_product(ex.cycle), signed_product(c, ex.sign));
    EXPECT_EQ(contract_one(ex.cycle, k + 1).cycle, c);
    auto exm = expand_minus_one(c, k);
    EXPECT_EQ(full_product(exm.cycle), signed_product(c, exm.sign));
    EXPECT_EQ(contract_minus_one(exm.cycle, k + 1).cycle, c);

    k = gen.index(2, m - 1);
    Cycle c1 = with_entry(c, k, one);
    auto co = contract_one(c1, k);
    EXPECT_EQ(full_product(co.cycle), signed_product(c1, co.sign));
    EXPECT_EQ(expand_one(co.cycle, k - 1).cycle, c1);
    Cycle cm = with_entry(c, k, -one);
    auto cmo = contract_minus_one(cm, k);
    EXPECT_EQ(full_product(cmo.cycle), signed_product(cm, cmo.sign));

    Cycle c0 = with_entry(c, k, zero);
    auto cz0 = contract_zero(c0, k);
    EXPECT_EQ(full_product(cz0.cycle), signed_product(c0, cz0.sign));
    RingElement u = gen.pick(gaussian);
    EXPECT_EQ(full_product(shift_zero(c0, k, u)), full_product(c0));

    k = gen.index(2, m - 2);
    if (!(c.at(k) * c.at(k + 1) - one).is_zero()) {
      EXPECT_EQ(full_product(contract_uv(c, k)), full_product(c));
      RingElement lambda = gen.pick(gaussian);
      if (!lambda.is_zero()) {
        EXPECT_EQ(full_product(rescale_lambda(c, k, lambda)), full_product(c));
      }
    }

    RingElement a = gen.pick(gaussian), uu = gen.pick(gaussian), b = gen.pick(gaussian), z = gen.pick(gaussian);
    if (!uu.is_zero() && !z.is_zero()) {
      auto w = conjugate_diag(a, uu, b, z);
      Matrix lhs = Matrix::diag(divide(one, z), z) * eta(a) * eta(uu) * eta(b) * Matrix::diag(z, divide(one, z));
      EXPECT_EQ(lhs, eta(w[0]) * eta(w[1]) * eta(w[2]));
    }
  }
}

TEST_P(RandomRules, WrappingWindowsKeepEpsilonCycles) {
  const bool gaussian = GetParam();
  RandomEntries gen(gaussian ? 21 : 22);
  const RingDescriptor ring = gaussian ? RingDescriptor::gaussian_rationals() : RingDescriptor::rationals();
  const RingElement one = RingElement::one(ring);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    // Grow a quiddity cycle from (0, 0) by random expansions and zero shifts.
    Cycle c(ring, {RingElement::zero(ring), RingElement::zero(ring)});
    int eps = -1;
    const long steps = gen.index(2, 6);
    for (long s = 0; s < steps; ++s) {
      auto g = gen.index(0, 1) ? expand_one(c, gen.index(1, static_cast<long>(c.size())))
                               : expand_minus_one(c, gen.index(1, static_cast<long>(c.size())));
      eps *= g.sign;
      c = g.cycle;
    }
    ASSERT_TRUE(is_epsilon_cycle(c, eps));
    const long m = static_cast<long>(c.size());
    // Window around the seam.
    if (m >= 4 && !(c.at(m) * c.at(m + 1) - one).is_zero()) {
      EXPECT_TRUE(is_epsilon_cycle(contract_uv(c, m), eps));
      EXPECT_TRUE(is_epsilon_cycle(rescale_lambda(c, m, gen.pick(gaussian) + RingElement::from_integer(ring, 17)), eps));
      ++checked;
    }
    for (long k : {1L, m}) {
      if (c.at(k) == one) {
        EXPECT_TRUE(is_epsilon_cycle(contract_one(c, k).cycle, eps));
      }
      if (c.at(k) == -one) {
        EXPECT_TRUE(is_epsilon_cycle(contract_minus_one(c, k).cycle, -eps));
      }
    }
  }
  EXPECT_GT(checked, 100);
}

INSTANTIATE_TEST_SUITE_P(QandQi, RandomRules, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "GaussianRationals" : "Rationals"; });

}  // namespace
