#include "cy5/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "cy5/errors.hpp"

namespace cy5 {
namespace {

TEST(Rational, NormalizesToLowestTerms) {
  const Rational q(6, -4);
  EXPECT_EQ(q.numerator_string(), "-3");
  EXPECT_EQ(q.denominator_string(), "2");
  EXPECT_EQ(q.to_string(), "-3/2");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), DomainError); }

TEST(Rational, DivisionByZeroThrows) {
  Rational q(3);
  EXPECT_THROW(q /= Rational(), DomainError);
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(5, 7), Rational(-5, 7));
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(pow(Rational(7), 0), Rational(1));
  EXPECT_EQ(abs(Rational(-5, 2)), Rational(5, 2));
}

TEST(Rational, LargeValuesStayExact) {
  // 3^200 has 96 digits; the round trip through p/q must not lose anything.
  const Rational big = pow(Rational(3), 200);
  const Rational back = big / pow(Rational(3), 199);
  EXPECT_EQ(back, Rational(3));
  EXPECT_EQ(big.to_string().size(), 96U);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(0).sign(), 0);
  EXPECT_EQ(Rational(-4, 3).sign(), -1);
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_TRUE(Rational(8, 4).is_integer());
  EXPECT_FALSE(Rational(8, 3).is_integer());
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_EQ(Rational::parse("-17"), Rational(-17));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-1/8"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("145366465734").to_string(), "145366465734");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "abc", "1/0", "1 2", "+-3", "3/-4", "0x10"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, StreamsAsPOverQ) {
  std::ostringstream out;
  out << Rational(-1, 8) << ' ' << Rational(4);
  EXPECT_EQ(out.str(), "-1/8 4");
}

}  // namespace
}  // namespace cy5
