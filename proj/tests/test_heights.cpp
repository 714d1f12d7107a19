#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weilcert/cyclotomic.hpp"
#include "weilcert/height.hpp"

using namespace weilcert;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

// Values from mpmath at 50 digits, truncated to 20 and padded by one unit.
RealEnclosure oracle_value(const char* truncated_numerator, const char* denominator) {
  Rational lo = oracle::Q(std::string(truncated_numerator) + "/" + denominator);
  Rational hi = lo + oracle::Q(std::string("1/") + denominator);
  return RealEnclosure::between(lo, hi, 200);
}

constexpr const char* kDen = "100000000000000000000";

void expect_height(const IntPolynomial& f, const RealEnclosure& expected) {
  HeightResult r = weil_height(f);
  EXPECT_LE(r.h.width(), 1e-10) << to_string(f);
  EXPECT_EQ(compare(r.h, expected), Ordering::Overlap) << to_string(f) << " " << r.h.to_string();
  EXPECT_FALSE(r.exact_zero);
}

}  // namespace

TEST(Heights, GoldenRatio) {
  // 0.24060591252980172374887945671218421156759216719283
  expect_height(P({-1, -1, 1}), oracle_value("24060591252980172374", kDen));
}

TEST(Heights, Lehmer) {
  // 0.016235761200773813943219880355496580770786270030621
  expect_height(P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}), oracle_value("1623576120077381394", kDen));
}

TEST(Heights, Rationals) {
  // log 3 = 1.0986122886681096913952452369225257046474905578227
  expect_height(P({-3, 2}), oracle_value("109861228866810969139", kDen));
  // log 2 = 0.69314718055994530941723212145817656807550013436025
  expect_height(P({-2, 1}), oracle_value("69314718055994530941", kDen));
}

TEST(Heights, OtherOracles) {
  // x^3 - 3x + 1: 0.35252560452497829; (x^2-2)(x^2-3) field: 0.57310791739029442
  auto cubic = weil_height(P({1, -3, 0, 1}));
  EXPECT_EQ(compare(cubic.h, RealEnclosure::between(oracle::Q("35252560452497828/100000000000000000"),
                                                    oracle::Q("35252560452497830/100000000000000000"))),
            Ordering::Overlap);
  auto biquad = weil_height(P({1, 0, -10, 0, 1}));
  EXPECT_EQ(compare(biquad.h, RealEnclosure::between(oracle::Q("57310791739029441/100000000000000000"),
                                                     oracle::Q("57310791739029443/100000000000000000"))),
            Ordering::Overlap);
  // 5x^2 - 6x + 5 has both roots on the unit circle; h = log(5)/2.
  auto circle = weil_height(P({5, -6, 5}));
  EXPECT_EQ(compare(circle.h, RealEnclosure::between(oracle::Q("80471895621705018/100000000000000000"),
                                                     oracle::Q("80471895621705019/100000000000000000"))),
            Ordering::Overlap);
}

TEST(Heights, CyclotomicIsExactlyZero) {
  for (unsigned n = 1; n <= 40; ++n) {
    HeightResult r = weil_height(cyclotomic_polynomial(n));
    EXPECT_TRUE(r.exact_zero) << n;
    EXPECT_TRUE(r.h.is_point());
    EXPECT_EQ(mpfr_sgn(r.h.lo()), 0);
    ASSERT_TRUE(r.root_of_unity_order.has_value());
    EXPECT_EQ(*r.root_of_unity_order, n);
  }
  HeightResult x = weil_height(P({0, 1}));
  EXPECT_TRUE(x.exact_zero);
}

TEST(Heights, ExactZeroOnlyWithCertificate) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 80; ++t) {
    IntPolynomial f = oracle::random_polynomial(rng, 1 + t % 7, 6);
    if (!squarefree_check(f)) continue;
    HeightResult r = weil_height(f);
    IntPolynomial g = primitive_part(f).primitive;
    bool certificate = cyclotomic_test(g).has_value() || g == P({0, 1});
    EXPECT_EQ(r.exact_zero, certificate) << to_string(f);
    EXPECT_GE(mpfr_sgn(r.h.lo()), 0);
  }
}

TEST(Heights, HeightIsMahlerMeasureOverDegree) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial f = primitive_part(oracle::random_polynomial(rng, 1 + t % 9, 50)).primitive;
    if (!squarefree_check(f)) continue;
    HeightResult r = weil_height(f);
    EXPECT_EQ(r.degree, f.degree());
    RealEnclosure scaled = r.h * r.degree;
    EXPECT_EQ(compare(scaled, r.mahler_log), Ordering::Overlap) << to_string(f);
    // log M(f) >= log |a_d| and log M(f) >= log |a_0|.
    RealEnclosure lead = log(RealEnclosure::from_integer(abs(f.leading())));
    EXPECT_NE(compare(r.mahler_log, lead), Ordering::Less);
    if (f.coeff(0) != 0) {
      RealEnclosure tail = log(RealEnclosure::from_integer(abs(f.coeff(0))));
      EXPECT_NE(compare(r.mahler_log, tail), Ordering::Less);
    }
  }
}

TEST(Heights, RationalNumbersFuzz) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (int t = 0; t < 200; ++t) {
    Integer p = dist(rng), q = dist(rng);
    Integer g = gcd(p, q);
    p /= g;
    q /= g;
    if (t % 2) p = -p;
    HeightResult r = weil_height(IntPolynomial({-p, q}));
    Integer m = std::max(Integer(abs(p)), q);
    if (m == 1) {
      EXPECT_TRUE(r.exact_zero);
      continue;
    }
    EXPECT_EQ(compare(r.h, log(RealEnclosure::from_integer(m, 256))), Ordering::Overlap) << p << "/" << q;
    EXPECT_LE(r.h.width(), 1e-12);
  }
}

TEST(Heights, InvarianceUnderReciprocalAndSign) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 40; ++t) {
    IntPolynomial f = oracle::random_polynomial(rng, 2 + t % 6, 20);
    if (f.coeff(0) == 0 || !squarefree_check(f)) continue;
    std::vector<Integer> rev(f.coeffs().rbegin(), f.coeffs().rend());
    std::vector<Integer> neg(f.coeffs());
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    HeightResult a = weil_height(f), b = weil_height(IntPolynomial(rev)), c = weil_height(IntPolynomial(neg));
    EXPECT_EQ(compare(a.h, b.h), Ordering::Overlap) << to_string(f);
    EXPECT_EQ(compare(a.h, c.h), Ordering::Overlap) << to_string(f);
  }
}

TEST(Heights, SmythReference) {
  // 0.093733191440987282170683588022626099930674408581355
  RealEnclosure s = smyth_reference();
  EXPECT_EQ(compare(s, oracle_value("9373319144098728217", kDen)), Ordering::Overlap);
  EXPECT_EQ(compare(s, weil_height(P({-1, -1, 0, 1})).h), Ordering::Overlap);
  // 3 h(theta) = log theta, theta = 1.3247179572447460259609088544780973407344040569017
  EXPECT_EQ(compare(s * 3, log(oracle_value("132471795724474602596", kDen))), Ordering::Overlap);
}

TEST(Heights, RejectsBadInput) {
  EXPECT_THROW(weil_height(P({4})), DomainError);
  EXPECT_THROW(weil_height(P({1, 2, 1})), DomainError);
}
