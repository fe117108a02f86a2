#include "extopt/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "extopt/errors.hpp"

namespace extopt {
namespace {

TEST(ParseRational, Decimals) {
  EXPECT_EQ(parse_rational("2.2"), fraction(11, 5));
  EXPECT_EQ(parse_rational("1.1"), fraction(11, 10));
  EXPECT_EQ(parse_rational("0.125"), fraction(1, 8));
  EXPECT_EQ(parse_rational("-0.5"), fraction(-1, 2));
  EXPECT_EQ(parse_rational(".5"), fraction(1, 2));
  EXPECT_EQ(parse_rational("3."), Rational(3));
}

TEST(ParseRational, Fractions) {
  EXPECT_EQ(parse_rational("11/10"), fraction(11, 10));
  EXPECT_EQ(parse_rational("6/4"), fraction(3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/7"), fraction(-3, 7));
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "1e3", "1..2", "/3", "3/", "1.2.3", "."}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(ParseRational, CanonicalStringsRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int i = 0; i < 2000; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    const std::string text = to_string(q);
    EXPECT_EQ(to_string(parse_rational(text)), text);
  }
}

TEST(FloorCeil, Signs) {
  EXPECT_EQ(floor_to_int(fraction(7, 2)), 3);
  EXPECT_EQ(ceil_to_int(fraction(7, 2)), 4);
  EXPECT_EQ(floor_to_int(fraction(-7, 2)), -4);
  EXPECT_EQ(ceil_to_int(fraction(-7, 2)), -3);
  EXPECT_EQ(floor_to_int(Rational(4)), 4);
  EXPECT_EQ(ceil_to_int(Rational(4)), 4);
}

TEST(Rationalize, RecoversSmallFractions) {
  EXPECT_EQ(rationalize(0.2, 1000), fraction(1, 5));
  EXPECT_EQ(rationalize(6.4, 1000), fraction(32, 5));
  EXPECT_EQ(rationalize(1.0 / 3.0, 1000), fraction(1, 3));
  EXPECT_EQ(rationalize(-0.75, 10), fraction(-3, 4));
  EXPECT_EQ(rationalize(3.0, 1), Rational(3));
}

TEST(Rationalize, BestApproximationWithinBound) {
  // pi: 3, 22/7, 333/106, 355/113.
  EXPECT_EQ(rationalize(M_PI, 7), fraction(22, 7));
  EXPECT_EQ(rationalize(M_PI, 112), fraction(333, 106));
  EXPECT_EQ(rationalize(M_PI, 113), fraction(355, 113));
}

TEST(Rationalize, NoBetterFractionWithSmallerDenominator) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = value(rng);
    const Rational exact(v);
    const Rational got = rationalize(v, 50);
    ASSERT_LE(got.get_den(), 50);
    const Rational err = abs(got - exact);
    for (long q = 1; q <= 50; ++q) {
      const long p = std::lround(v * q);
      for (long dp = -1; dp <= 1; ++dp) {
        EXPECT_LE(err, abs(fraction(p + dp, q) - exact));
      }
    }
  }
}

}  // namespace
}  // namespace extopt
