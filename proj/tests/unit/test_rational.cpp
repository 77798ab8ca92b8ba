#include <gtest/gtest.h>

#include "c4ex/rational.hpp"

namespace c4ex {
namespace {

TEST(BigRational, CanonicalForm) {
  const BigRational x(6, -4);
  EXPECT_EQ(x.str(), "-3/2");
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(BigRational(4, 2).str(), "2");
  EXPECT_EQ(BigRational(4, 2).fraction_str(), "2/1");
  EXPECT_THROW(BigRational(1, 0), std::domain_error);
}

TEST(BigRational, ParsesDecimalsExactly) {
  EXPECT_EQ(BigRational::parse("0.2"), BigRational(1, 5));
  EXPECT_EQ(BigRational::parse("0.55"), BigRational(11, 20));
  EXPECT_EQ(BigRational::parse("0.210375"), BigRational(1683, 8000));
  EXPECT_EQ(BigRational::parse("-7/2"), BigRational(-7, 2));
  EXPECT_EQ(BigRational::parse("12"), BigRational(12));
  EXPECT_EQ(BigRational::parse(".5"), BigRational(1, 2));
  EXPECT_EQ(BigRational::parse("-0.0182"), BigRational(-91, 5000));
  EXPECT_EQ(BigRational::parse("0.055"), BigRational(11, 200));
  EXPECT_EQ(BigRational::parse("010/08"), BigRational(5, 4));
  for (const char* bad : {"", "-", "1/0", "1.2.3", "x", "1/", "3e5"}) {
    EXPECT_THROW(BigRational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(BigRational, FloorCeilTowardsInfinity) {
  EXPECT_EQ(BigRational(7, 2).floor(), 3);
  EXPECT_EQ(BigRational(7, 2).ceil(), 4);
  EXPECT_EQ(BigRational(-7, 2).floor(), -4);
  EXPECT_EQ(BigRational(-7, 2).ceil(), -3);
  EXPECT_EQ(BigRational(5).floor(), 5);
}

TEST(BigRational, ArithmeticAndOrdering) {
  const BigRational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, BigRational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, BigRational(1, 18));
  EXPECT_EQ(a / b, BigRational(2));
  EXPECT_LT(b, a);
  EXPECT_EQ(-a, BigRational(-1, 3));
  EXPECT_EQ(pow(BigRational(2, 3), 3), BigRational(8, 27));
  EXPECT_EQ(abs(BigRational(-2, 3)), BigRational(2, 3));
}

TEST(BigRational, GeneralizedBinomial) {
  EXPECT_EQ(binom2(BigRational(5)), BigRational(10));
  EXPECT_EQ(binom2(BigRational(1, 2)), BigRational(-1, 8));
  EXPECT_EQ(binom2(BigRational(0)), BigRational(0));
}

TEST(Isqrt, MatchesDefinitionAroundSquares) {
  for (std::int64_t k = 0; k < 2000; ++k) {
    for (std::int64_t n : {k * k, k * k + k, (k + 1) * (k + 1) - 1}) {
      const std::int64_t s = isqrt(n);
      EXPECT_LE(s * s, n);
      EXPECT_GT((s + 1) * (s + 1), n);
    }
  }
  const std::int64_t big = 3037000499LL;  // floor(sqrt(2^63 - 1))
  EXPECT_EQ(isqrt(big * big), big);
  EXPECT_EQ(isqrt(big * big - 1), big - 1);
  EXPECT_EQ(isqrt(mpz_class("1000000000000000000000000")), mpz_class("1000000000000"));
}

}  // namespace
}  // namespace c4ex
