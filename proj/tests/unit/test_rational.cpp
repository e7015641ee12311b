#include <gtest/gtest.h>

#include <unordered_set>

#include "polyban/errors.hpp"
#include "polyban/rational.hpp"

using namespace polyban;

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("+2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/2").str(), "61728394506172839450617283945");
}

TEST(Rational, ParseRejectsNonRationals) {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "1/-2", "1 /2", "1e3", "--1"}) {
    try {
      (void)Rational::parse(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, StringRoundTrip) {
  for (long p = -12; p <= 12; ++p)
    for (long q = 1; q <= 7; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), third);
  EXPECT_EQ(Rational(1) / Rational(3), third);
  EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
}

TEST(Rational, OrderingAndHelpers) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(abs(Rational(-2, 3)), Rational(2, 3));
  EXPECT_EQ(positive_part(Rational(-1)), Rational(0));
  EXPECT_EQ(positive_part(Rational(5, 2)), Rational(5, 2));
  EXPECT_EQ(max(Rational(1), Rational(2)), Rational(2));
  EXPECT_EQ(min(Rational(1), Rational(2)), Rational(1));
}

TEST(Rational, EqualValuesHashEqually) {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(-1, 2)};
  EXPECT_EQ(s.size(), 2u);
}

TEST(Rational, VectorHelpers) {
  const RatVec v = parse_rational_list("1, -1/2,3");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(to_string(v), "(1, -1/2, 3)");
  EXPECT_EQ(dot(v, v), Rational(41, 4));
  EXPECT_EQ(v - v, zeros(3));
  EXPECT_TRUE(is_zero(v - v));
  EXPECT_EQ(unit_vector(3, 1), (RatVec{0, 1, 0}));
  EXPECT_THROW(parse_rational_list("1,,2"), Error);
}
