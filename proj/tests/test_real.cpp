#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weilcert/real.hpp"

using namespace weilcert;

namespace {

RealEnclosure I(long lo, long hi, long prec = kDefaultPrecision) {
  return RealEnclosure::between(Rational(lo), Rational(hi), prec);
}

bool same(const RealEnclosure& x, long lo, long hi) {
  return mpfr_cmp_si(x.lo(), lo) == 0 && mpfr_cmp_si(x.hi(), hi) == 0;
}

// 0.69314718055994530941723212145817656807550013436025 (mpmath, 50 digits)
const Rational kLog2("69314718055994530941723212145817656807550013436025/"
                     "100000000000000000000000000000000000000000000000000");
// exp(3/4) = 2.1170000166126746685453698198370956101344915847024
const Rational kExp34("21170000166126746685453698198370956101344915847024/"
                      "10000000000000000000000000000000000000000000000000");

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 1000);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(RealEnclosure, ArithmeticExamples) {
  EXPECT_TRUE(same(I(1, 1) + I(2, 2), 3, 3));
  EXPECT_TRUE(same(I(-1, 2) * I(3, 4), -4, 8));
  EXPECT_TRUE(same(max(I(0, 0), I(-1, 2)), 0, 2));
  EXPECT_TRUE(same(min(I(0, 0), I(-1, 2)), -1, 0));
  EXPECT_TRUE(same(-I(1, 3), -3, -1));
  EXPECT_TRUE(same(abs(I(-2, 1)), 0, 2));
  EXPECT_TRUE(same(hull(I(0, 1), I(5, 6)), 0, 6));
  EXPECT_TRUE(same(sqr(I(-2, 3)), 0, 9));
  EXPECT_THROW(I(1, 1) / I(-1, 1), DomainError);
  EXPECT_THROW(RealEnclosure::between(Rational(2), Rational(1)), DomainError);
}

TEST(RealEnclosure, LogOfTwoAt64Bits) {
  RealEnclosure l = log(I(2, 2, 64));
  EXPECT_TRUE(l.contains(kLog2));
  EXPECT_LE(l.width(), 1e-15);
  EXPECT_EQ(l.precision(), 64);
  EXPECT_THROW(log(I(-1, 1)), DomainError);
  EXPECT_THROW(log(I(0, 1)), DomainError);
}

TEST(RealEnclosure, ExpAndPow) {
  RealEnclosure one = exp(I(0, 0));
  EXPECT_TRUE(same(one, 1, 1));
  RealEnclosure e = exp(I(1, 1));
  RealEnclosure p = pow(e, Rational(3, 4));
  EXPECT_TRUE(p.contains(kExp34));
  EXPECT_LT(p.width(), 1e-30);
  EXPECT_TRUE(same(pow(I(-2, 3), 2), 0, 9));
  EXPECT_TRUE(same(pow(I(-2, 3), 3), -8, 27));
  EXPECT_TRUE(pow(I(2, 2), -1).contains(Rational(1, 2)));
  EXPECT_THROW(pow(I(-1, 1), Rational(1, 2)), DomainError);
  RealEnclosure s = sqrt(I(2, 2));
  RealEnclosure bracket = RealEnclosure::between(oracle::Q("141421356237309504880/100000000000000000000"),
                                                 oracle::Q("141421356237309504881/100000000000000000000"));
  EXPECT_TRUE(bracket.contains(s));
  EXPECT_TRUE(sqr(s).contains(Rational(2)));
}

TEST(RealEnclosure, Compare) {
  EXPECT_EQ(compare(I(1, 2), I(3, 4)), Ordering::Less);
  EXPECT_EQ(compare(I(1, 3), I(2, 4)), Ordering::Overlap);
  EXPECT_EQ(compare(I(5, 6), I(0, 1)), Ordering::Greater);
  EXPECT_EQ(compare(I(1, 2), I(2, 3)), Ordering::Overlap);
}

TEST(RealEnclosure, ContainmentFuzz) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 2000; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng), d = random_rational(rng);
    Rational r_lo = std::min(a, b), r_hi = std::max(a, b), s_lo = std::min(c, d), s_hi = std::max(c, d);
    long prec = 24 + (t % 5) * 20;
    RealEnclosure x = RealEnclosure::between(r_lo, r_hi, prec);
    RealEnclosure y = RealEnclosure::between(s_lo, s_hi, prec);
    // Random points inside both operands.
    std::uniform_int_distribution<int> w(0, 16);
    Rational u(w(rng), 16), v(w(rng), 16);
    Rational r = r_lo + (r_hi - r_lo) * u, s = s_lo + (s_hi - s_lo) * v;
    ASSERT_TRUE((x + y).contains(r + s));
    ASSERT_TRUE((x - y).contains(r - s));
    ASSERT_TRUE((x * y).contains(r * s));
    ASSERT_TRUE(max(x, y).contains(std::max(r, s)));
    ASSERT_TRUE(abs(x).contains(abs(r)));
    if (!y.contains_zero()) ASSERT_TRUE((x / y).contains(r / s));
  }
}

TEST(RealEnclosure, ExpOfLogContainsInput) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    Rational q = abs(random_rational(rng)) + Rational(1, 1000);
    RealEnclosure x = RealEnclosure::from_rational(q, 40 + t % 100);
    ASSERT_TRUE(exp(log(x)).contains(x));
    ASSERT_TRUE(sqr(sqrt(x)).contains(q));
  }
}

TEST(RealEnclosure, RefinementIsNested) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    Rational q = abs(random_rational(rng)) + 2;
    RealEnclosure coarse = RealEnclosure::from_rational(q, 53);
    RealEnclosure fine = RealEnclosure::from_rational(q, 212);
    auto eval = [](const RealEnclosure& x) { return log(log(x) + x) * exp(RealEnclosure(x.precision()) - x) + sqrt(x); };
    ASSERT_TRUE(eval(coarse).contains(eval(fine)));
    ASSERT_LE(eval(fine).width(), eval(coarse).width());
  }
}

TEST(RealEnclosure, PrecisionAndPrinting) {
  RealEnclosure x = RealEnclosure::from_rational(Rational(1, 3), 64);
  EXPECT_EQ(x.precision(), 64);
  EXPECT_FALSE(x.is_point());
  EXPECT_TRUE(x.contains(Rational(1, 3)));
  EXPECT_EQ((x + RealEnclosure::from_integer(1, 200)).precision(), 200);
  EXPECT_TRUE(x.with_precision(24).contains(x));
  EXPECT_EQ(I(1, 2).to_string(3), "[1.00e+00, 2.00e+00]");
  EXPECT_TRUE(RealEnclosure::from_double(0.1).is_point());
  RealEnclosure pi = RealEnclosure::pi(100);
  EXPECT_GT(mpfr_cmp_d(pi.lo(), 3.14159265358979), 0);
  EXPECT_LT(mpfr_cmp_d(pi.hi(), 3.14159265358980), 0);
}

TEST(ComplexEnclosure, PolynomialEvaluation) {
  ComplexEnclosure i(RealEnclosure(128), RealEnclosure::from_integer(1));
  IntPolynomial f({Integer(1), Integer(0), Integer(1)});
  ComplexEnclosure v = evaluate(f, i);
  EXPECT_TRUE(v.re.contains(Rational(0)));
  EXPECT_TRUE(v.im.contains(Rational(0)));
  ComplexEnclosure z(RealEnclosure::from_integer(3), RealEnclosure::from_integer(4));
  EXPECT_TRUE(z.abs().contains(Rational(5)));
  EXPECT_TRUE(z.intersects(z));
}
