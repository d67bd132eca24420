#include <gtest/gtest.h>

#include "lexcone/random.hpp"
#include "lexcone/rational.hpp"

namespace lexcone {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-4/2"), Rational(-2));
}

TEST(Rational, CanonicalFormOnOutput) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/00", "1.5", "a", "1/2/3", "--1", "1 "})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ArbitraryPrecision) {
  Rational big = parse_rational("123456789012345678901234567890/7");
  EXPECT_EQ(to_string(big * 7), "123456789012345678901234567890");
}

TEST(Rng, DeterministicPerSeedAndStream) {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 10; ++i) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    (void)c.next();
  }
  EXPECT_NE(Rng::derive(1, 2, 3).next(), Rng::derive(1, 2, 4).next());
  EXPECT_EQ(Rng::derive(1, 2, 3).next(), Rng::derive(1, 2, 3).next());
}

TEST(Rng, RangesStayInBounds) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    long v = rng.range(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
    EXPECT_GT(rng.positive_rational(3, 3), 0);
  }
}

}  // namespace
}  // namespace lexcone
