#include <cmath>

#include <gtest/gtest.h>

#include "rdsym/cyclotomic.hpp"
#include "rdsym/errors.hpp"
#include "rdsym/random.hpp"
#include "rdsym/rational.hpp"

using rdsym::Cyclotomic;
using rdsym::Rational;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rational::parse("+7").str(), "7");
  EXPECT_EQ(Rational::parse("0/5"), Rational{0});
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "abc", "1/", "/2", "1.5", "1/2/3", "1 /2", "--1", "3/-6"})
    EXPECT_THROW(Rational::parse(bad), rdsym::ParseError) << bad;
  EXPECT_THROW(Rational::parse("1/0"), rdsym::ParseError);
  EXPECT_THROW(Rational(1, 0), rdsym::DivisionByZero);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 2), b(1, 3);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 6));
  EXPECT_EQ(a / b, Rational(3, 2));
  EXPECT_THROW(a / Rational{0}, rdsym::DivisionByZero);
  EXPECT_THROW(Rational{0}.inverse(), rdsym::DivisionByZero);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(-5), 0), Rational{1});
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, RoundTripProperty) {
  rdsym::Sampler rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = rng.rational(1000);
    EXPECT_EQ(Rational::parse(x.str()), x);
  }
}

TEST(Rational, FieldAxiomsProperty) {
  rdsym::Sampler rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * a.inverse(), Rational{1});
    EXPECT_EQ(a - a, Rational{0});
  }
}

TEST(Cyclotomic, ZetaRelations) {
  const Cyclotomic z = Cyclotomic::zeta();
  // zeta^2 = zeta - 1, zeta^3 = -1, zeta^6 = 1
  EXPECT_EQ(z * z, z - Cyclotomic(1));
  EXPECT_EQ(cyc_pow(z, 3), Cyclotomic(-1));
  EXPECT_EQ(cyc_pow(z, 6), Cyclotomic(1));
  EXPECT_EQ(cyc_pow(z, 4) + cyc_pow(z, 2) + Cyclotomic(1), Cyclotomic(0));
  EXPECT_EQ(z * z.conj(), Cyclotomic(1));
  EXPECT_EQ(z.norm(), Rational{1});
  for (int k = -12; k <= 12; ++k) EXPECT_EQ(cyc_pow(z, k), Cyclotomic::zeta_pow(k)) << k;
}

TEST(Cyclotomic, InverseOfZeroThrows) {
  EXPECT_THROW(Cyclotomic(0).inverse(), rdsym::NotAUnit);
}

TEST(Cyclotomic, FieldProperty) {
  rdsym::Sampler rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Cyclotomic x(rng.rational(), rng.rational());
    const Cyclotomic y(rng.rational(), rng.rational());
    EXPECT_EQ(x * x.inverse(), Cyclotomic(1));
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ(x * x.conj(), Cyclotomic(x.norm()));
    EXPECT_GT(x.norm(), Rational{0});
  }
}

TEST(Cyclotomic, PowerExamples) {
  const Cyclotomic z = Cyclotomic::zeta();
  EXPECT_EQ(cyc_pow(z, 2), Cyclotomic(-1, 1));
  EXPECT_EQ(cyc_pow(z, 4), Cyclotomic(0, -1));
  EXPECT_TRUE(cyc_is_zero(Cyclotomic(0, 0)));
  EXPECT_FALSE(cyc_is_zero(Cyclotomic(1, 0)));
  EXPECT_THROW(cyc_pow(Cyclotomic(0), -1), rdsym::NotAUnit);
}

TEST(Cyclotomic, PeriodAndThreeTermIdentity) {
  const Cyclotomic z = Cyclotomic::zeta();
  for (int n = -100; n <= 100; ++n) {
    EXPECT_EQ(cyc_pow(z, n + 6), cyc_pow(z, n));
    EXPECT_TRUE(cyc_is_zero(cyc_pow(z, n + 4) + cyc_pow(z, n + 2) + cyc_pow(z, n)));
  }
}

TEST(Cyclotomic, AssociativityProperty) {
  rdsym::Sampler rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Cyclotomic x(rng.rational(), rng.rational());
    const Cyclotomic y(rng.rational(), rng.rational());
    const Cyclotomic w(rng.rational(), rng.rational());
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
  }
}

TEST(Rational, WideValuesConvertToLongDouble) {
  const Rational big = pow(Rational(3, 7), 60);
  const long double expected = std::pow(3.0L / 7.0L, 60);
  EXPECT_NEAR(static_cast<double>(big.to_long_double() / expected), 1.0, 1e-15);
}
