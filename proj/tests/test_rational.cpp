#include <gtest/gtest.h>

#include "kleinian/rational.hpp"

using namespace kleinian;

TEST(Rational, ParsesExactFractions) {
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational(" 0/5 "), Rational(0));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "--1", "1e3", "1/2/3"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, Lists) {
  EXPECT_TRUE(parse_rational_list("").empty());
  const auto v = parse_rational_list("1/2,-1,0");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], Rational(1, 2));
  EXPECT_EQ(v[1], Rational(-1));
  EXPECT_EQ(parse_integer_list("1,0,2"), (std::vector<long>{1, 0, 2}));
  EXPECT_THROW(parse_integer_list("1,x"), std::invalid_argument);
  EXPECT_THROW(parse_integer_list("1/2"), std::invalid_argument);
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(floor_div(-7, 3), -3);
  EXPECT_EQ(floor_div(7, 3), 2);
  EXPECT_EQ(ceil_div(-7, 3), -2);
  EXPECT_EQ(ceil_div(7, 3), 3);
  EXPECT_EQ(mod(-1, 4), 3);
  EXPECT_EQ(mod(9, 4), 1);
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
}

TEST(Rational, RandomRespectsBounds) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational x = random_rational(rng, 6, 3);
    EXPECT_LE(x.get_den(), 6);
    EXPECT_LE(abs(x), 3);
  }
}
