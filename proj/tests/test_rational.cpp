#include <gtest/gtest.h>

#include "ghgeo/errors.hpp"
#include "ghgeo/rational.hpp"

namespace ghgeo {
namespace {

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(Rational::parse("3/10"), Rational(3, 10));
  EXPECT_EQ(Rational::parse("-6/20"), Rational(-3, 10));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1.5", "1/-2", "--1", "1 /2"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(-2, -4).str(), "1/2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational(1, 3).decimal(4), "0.3333");
}

TEST(Rational, ExactArithmetic) {
  const Rational a(1, 10);
  EXPECT_EQ(a + a + a, Rational(3, 10));
  EXPECT_EQ(Rational(1, 3) * Rational(3), Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(2, 3), Rational(-1, 6));
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
}

TEST(Rational, FloorAndCeilDivision) {
  EXPECT_EQ(floor_div(Rational(-23, 10), Rational(1, 4)), Rational(-10));
  EXPECT_EQ(ceil_div(Rational(-23, 10), Rational(1, 4)), Rational(-9));
  EXPECT_EQ(floor_div(Rational(1), Rational(1, 2)), Rational(2));
  EXPECT_EQ(ceil_div(Rational(1), Rational(1, 2)), Rational(2));
}

TEST(Rational, TextRoundTripOnRandomValues) {
  for (int num = -40; num <= 40; num += 3) {
    for (int den = 1; den <= 17; den += 2) {
      const Rational r(num, den);
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
  }
}

}  // namespace
}  // namespace ghgeo
