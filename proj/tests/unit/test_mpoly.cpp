#include <gtest/gtest.h>

#include <random>

#include "c4ex/mpoly.hpp"

namespace c4ex {
namespace {

const MPoly q = MPoly::var(MPoly::kQ);
const MPoly r = MPoly::var(MPoly::kR);
const MPoly s = MPoly::var(MPoly::kS);

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  return BigRational(num(rng), den(rng));
}

MPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> exp(0, 2);
  MPoly p;
  for (int i = 0; i < 4; ++i) p += MPoly::monomial(random_rational(rng), {exp(rng), exp(rng), exp(rng)});
  return p;
}

TEST(MPoly, ZeroCoefficientsAreDropped) {
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_TRUE(MPoly(0).is_zero());
  EXPECT_TRUE(MPoly::monomial(0, {1, 2, 3}).terms().empty());
  EXPECT_EQ((q + r - q).terms().size(), 1U);
}

TEST(MPoly, ParseAndPrint) {
  EXPECT_EQ(MPoly::parse("q^2 + q - 4*r - 8"), q * q + q - 4 * r - 8);
  EXPECT_EQ(MPoly::parse("q^2 + q - 4*r - 8").str(), "q^2 + q - 4*r - 8");
  EXPECT_EQ(MPoly::parse("q^2 + 0.45q + r"), q * q + MPoly(BigRational(9, 20)) * q + r);
  EXPECT_EQ(MPoly::parse("-(q - 1)^2"), -(q * q) + 2 * q - 1);
  EXPECT_EQ(MPoly::parse("6.6q^3 r"), MPoly::monomial(BigRational(33, 5), {3, 1, 0}));
  EXPECT_EQ(MPoly::parse("q^4*(-0.2*r - 0.2)"), MPoly::monomial(BigRational(-1, 5), {4, 1, 0}) +
                                                    MPoly::monomial(BigRational(-1, 5), {4, 0, 0}));
  EXPECT_EQ(MPoly::parse("-0.210375 q^5").coefficient({5, 0, 0}), BigRational(-1683, 8000));
  EXPECT_EQ(MPoly::parse("0").str(), "0");
  EXPECT_EQ(MPoly::parse("-s").str(), "-s");
  for (const char* bad : {"", "q +", "(q", "q^", "x", "q^-1", "2..5", "q/r", "q/0"}) {
    EXPECT_THROW(MPoly::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(MPoly, PrintParseRoundTrip) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const MPoly p = random_poly(rng) * random_poly(rng);
    EXPECT_EQ(MPoly::parse(p.str()), p) << p.str();
  }
}

TEST(MPoly, RingAxioms) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + MPoly(), a);
    EXPECT_EQ(a * MPoly(1), a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a * MPoly()).is_zero());
  }
}

TEST(MPoly, ProductOfLinearFormsMatchesGridEvaluation) {
  // Degree 3 in each variable, so a 4 x 4 x 4 grid pins it down.
  const MPoly p = (q - 2 * r + s + 1) * (3 * q + s - 5) * (r - s + MPoly(BigRational(1, 2))) * (q * r - s);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        const BigRational x(i * 3 - 4, 2), y(j - 1), z(k * 5 - 7, 3);
        const BigRational direct =
            (x - 2 * y + z + 1) * (3 * x + z - 5) * (y - z + BigRational(1, 2)) * (x * y - z);
        ASSERT_EQ(p.eval(x, y, z), direct);
      }
    }
  }
}

TEST(MPoly, DegreeCoefficientAndSubstitution) {
  const MPoly p = MPoly::parse("3*q^2*s^2 - q*s + 4*r*s + 7");
  EXPECT_EQ(p.degree(MPoly::kS), 2U);
  EXPECT_EQ(p.degree(MPoly::kR), 1U);
  EXPECT_EQ(p.coefficient_of(MPoly::kS, 2), 3 * q * q);
  EXPECT_EQ(p.coefficient_of(MPoly::kS, 1), 4 * r - q);
  EXPECT_EQ(p.coefficient_of(MPoly::kS, 0), MPoly(7));
  EXPECT_TRUE(p.coefficient_of(MPoly::kS, 5).is_zero());
  const MPoly sub = p.substitute(MPoly::kS, q + 1);
  EXPECT_EQ(sub.degree(MPoly::kS), 0U);
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) EXPECT_EQ(sub.eval(x, y, 0), p.eval(x, y, x + 1));
  }
  EXPECT_EQ(pow(q + 1, 3), MPoly::parse("q^3 + 3q^2 + 3q + 1"));
  EXPECT_EQ(pow(q, 0), MPoly(1));
}

}  // namespace
}  // namespace c4ex
