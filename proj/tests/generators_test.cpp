#include <gtest/gtest.h>

#include "lexcone/generators.hpp"
#include "lexcone/sampling.hpp"
#include "test_support.hpp"

namespace lexcone {
namespace {

using testing::chain;
using testing::q;
using testing::vec;

TEST(Decompose, Examples) {
  const Poset c = chain({"a", "b"});
  const std::size_t a = c.index("a"), b = c.index("b");
  EXPECT_EQ(decompose(vec(c, {{"a", "1"}, {"b", "-3"}})), (Decomposition{{Rational(1), Pair{a, b, Rational(3)}}}));
  EXPECT_EQ(decompose(vec(c, {{"a", "5"}})), (Decomposition{{Rational(5), Single{a}}}));
  EXPECT_TRUE(decompose(LexVector(c)).empty());

  const Poset tree = Poset::from_covers({"r", "s", "t"}, {{"r", "s"}, {"r", "t"}});
  const std::size_t r = tree.index("r"), s = tree.index("s"), t = tree.index("t");
  EXPECT_EQ(decompose(vec(tree, {{"r", "2"}, {"s", "-1"}, {"t", "-1"}})),
            (Decomposition{{Rational(1), Pair{r, s, Rational(1)}}, {Rational(1), Pair{r, t, Rational(1)}}}));

  const Poset forest = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}});
  EXPECT_EQ(decompose(vec(forest, {{"a", "1"}, {"b", "-2"}, {"c", "3"}})),
            (Decomposition{{Rational(1), Pair{forest.index("a"), forest.index("b"), Rational(2)}},
                           {Rational(3), Single{forest.index("c")}}}));
}

TEST(Decompose, PositiveEntriesAboveThePivot) {
  const Poset c = chain({"a", "b", "c"});
  const auto d = decompose(vec(c, {{"a", "1/2"}, {"b", "4"}, {"c", "-1"}}));
  EXPECT_EQ(d, (Decomposition{{Rational(4), Single{c.index("b")}},
                              {q("1/2"), Pair{c.index("a"), c.index("c"), Rational(2)}}}));
}

TEST(Decompose, NotPositive) {
  const Poset a = Poset::antichain({"a", "b"});
  EXPECT_THROW(decompose(vec(a, {{"a", "1"}, {"b", "-1"}})), NotPositive);
  EXPECT_THROW(decompose(vec(chain({"a", "b"}), {{"a", "-1"}, {"b", "1"}})), NotPositive);
}

TEST(Generators, Validity) {
  const Poset c = chain({"a", "b"});
  EXPECT_TRUE(is_valid(c, Pair{0, 1, Rational(1)}));
  EXPECT_FALSE(is_valid(c, Pair{1, 0, Rational(1)}));
  EXPECT_FALSE(is_valid(c, Pair{0, 1, Rational(0)}));
  EXPECT_FALSE(is_valid(c, Single{2}));
  EXPECT_EQ(to_vector(c, Pair{0, 1, q("3/2")}), vec(c, {{"a", "1"}, {"b", "-3/2"}}));
}

TEST(RandomPositive, Deterministic) {
  const Poset p = Poset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(random_positive(p, 7, 6), random_positive(p, 7, 6));
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_TRUE(random_positive(p, seed, 6).is_positive());
  EXPECT_TRUE(random_positive(p, 3, 0).is_zero());
}

class DecomposeProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DecomposeProperties, RecombinesExactly) {
  Rng rng(GetParam());
  const Poset p = sampling::random_poset(rng, 1, 8);
  LexVector f = random_positive(p, rng, 1 + rng.below(6));
  if (rng.chance(1, 2)) {
    // Rejection-sampled elements reach shapes the generator sum does not.
    for (int k = 0; k < 50; ++k) {
      LexVector h = sampling::random_vector(rng, p);
      if (h.is_positive()) {
        f = h;
        break;
      }
    }
  }
  std::size_t splits = 0;
  const auto d = decompose(f, [&](const LexVector& head, const LexVector& rest) {
    ++splits;
    EXPECT_TRUE(head.is_positive());
    EXPECT_TRUE(rest.is_positive());
  });
  EXPECT_EQ(recombine(p, d), f);
  for (const auto& term : d) {
    EXPECT_GT(term.mu, 0);
    EXPECT_TRUE(is_valid(p, term.gen));
  }
  EXPECT_LE(splits, f.support_size());
}

INSTANTIATE_TEST_SUITE_P(Seeds, DecomposeProperties, ::testing::Range<std::uint64_t>(0, 1000));

}  // namespace
}  // namespace lexcone
