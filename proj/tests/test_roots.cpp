#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weilcert/roots.hpp"

using namespace weilcert;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

const IntPolynomial kLehmer = P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

bool disjoint(const ComplexBox& a, const ComplexBox& b) {
  RealEnclosure gap = (a.center - b.center).abs() - a.radius - b.radius;
  return mpfr_sgn(gap.lo()) > 0;
}

}  // namespace

TEST(Roots, SquareRootOfTwo) {
  auto roots = isolate_roots(P({-2, 0, 1}), 1e-10);
  ASSERT_EQ(roots.size(), 2u);
  // +-1.41421356237309504880 (Newton oracle)
  Rational lo = oracle::Q("141421356237309504880/100000000000000000000");
  Rational hi = oracle::Q("141421356237309504881/100000000000000000000");
  for (const auto& b : roots) {
    EXPECT_TRUE(b.real);
    EXPECT_LE(b.width(), 1e-10);
    EXPECT_TRUE(b.im.contains(Rational(0)));
  }
  EXPECT_EQ(compare(roots[0].re, RealEnclosure::between(-hi, -lo)), Ordering::Overlap);
  EXPECT_EQ(compare(roots[0].re, RealEnclosure::from_integer(0)), Ordering::Less);
  EXPECT_EQ(compare(roots[1].re, RealEnclosure::between(lo, hi)), Ordering::Overlap);
  EXPECT_EQ(compare(roots[1].re, RealEnclosure::from_rational(Rational(1414213562, 1000000000))), Ordering::Greater);
  EXPECT_EQ(compare(roots[1].re, RealEnclosure::from_rational(Rational(1414213563, 1000000000))), Ordering::Less);
}

TEST(Roots, RationalRoot) {
  auto roots = isolate_roots(P({-7, 1}), 1e-12);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_TRUE(roots[0].real);
  EXPECT_TRUE(roots[0].re.contains(Rational(7)));
  EXPECT_TRUE(roots[0].im.contains(Rational(0)));
}

TEST(Roots, LehmerSalemRoot) {
  auto roots = isolate_roots(kLehmer, 1e-12);
  ASSERT_EQ(roots.size(), 10u);
  int outside = 0;
  for (const auto& b : roots) {
    RealEnclosure modulus = b.box().abs();
    if (mpfr_cmp_ui(modulus.lo(), 1) > 0) {
      ++outside;
      EXPECT_TRUE(b.real);
      // 1.1762808182599175065 (mpmath); f changes sign on [1.17, 1.18].
      EXPECT_EQ(compare(b.re, RealEnclosure::between(oracle::Q("117628081825991750/100000000000000000"),
                                                     oracle::Q("117628081825991751/100000000000000000"))),
                Ordering::Overlap);
      EXPECT_EQ(compare(b.re, RealEnclosure::from_rational(Rational(117, 100))), Ordering::Greater);
      EXPECT_EQ(compare(b.re, RealEnclosure::from_rational(Rational(118, 100))), Ordering::Less);
    }
  }
  EXPECT_EQ(outside, 1);
  Integer a = kLehmer(Integer(0));
  Rational at117 = 0, at118 = 0;
  for (auto it = kLehmer.coeffs().rbegin(); it != kLehmer.coeffs().rend(); ++it) {
    at117 = at117 * Rational(117, 100) + *it;
    at118 = at118 * Rational(118, 100) + *it;
  }
  EXPECT_LT(sgn(at117) * sgn(at118), 0);
  EXPECT_EQ(a, 1);
}

TEST(Roots, RealRootCountMatchesSturm) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    IntPolynomial f = oracle::random_polynomial(rng, 1 + t % 9, 12);
    if (!squarefree_check(f)) continue;
    auto roots = isolate_roots(f, 1e-8);
    ASSERT_EQ(static_cast<int>(roots.size()), f.degree());
    int real = 0;
    for (const auto& b : roots)
      if (b.real) ++real;
    EXPECT_EQ(real, oracle::sturm_real_roots(f)) << to_string(f);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Roots, CertificatesAndSymmetry) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial f = oracle::random_polynomial(rng, 2 + t % 10, 30);
    if (!squarefree_check(f)) continue;
    auto roots = isolate_roots(f, 1e-10);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_LE(roots[i].width(), 1e-10);
      for (std::size_t j = i + 1; j < roots.size(); ++j) EXPECT_TRUE(disjoint(roots[i], roots[j]));
      // The conjugate of every box is another box.
      ComplexEnclosure conj(roots[i].center.re, -roots[i].center.im);
      int partners = 0;
      for (const auto& b : roots)
        if (b.box().intersects(conj)) ++partners;
      EXPECT_EQ(partners, 1);
      if (i > 0) {
        const auto& a = roots[i - 1].center;
        const auto& b = roots[i].center;
        bool ordered = mpfr_cmp(a.re.lo(), b.re.lo()) < 0 ||
                       (mpfr_cmp(a.re.lo(), b.re.lo()) == 0 && mpfr_cmp(a.im.lo(), b.im.lo()) <= 0);
        EXPECT_TRUE(ordered);
      }
    }
  }
}

TEST(Roots, ProductOfRootsIdentity) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial f = oracle::random_polynomial(rng, 1 + t % 8, 25);
    if (f.coeff(0) == 0 || !squarefree_check(f)) continue;
    auto roots = isolate_roots(f, 1e-12);
    RealEnclosure sum(kDefaultPrecision);
    for (const auto& b : roots) sum = sum + log_abs(b);
    Rational ratio(abs(f.coeff(0)), abs(f.leading()));
    ratio.canonicalize();
    EXPECT_TRUE(sum.contains(log(RealEnclosure::from_rational(ratio, 200)))) << to_string(f);
  }
}

TEST(Roots, LogPlusAbs) {
  auto half = isolate_roots(P({-1, 2}), 1e-12);
  EXPECT_EQ(mpfr_sgn(log_plus_abs(half[0]).lo()), 0);
  EXPECT_EQ(mpfr_sgn(log_plus_abs(half[0]).hi()), 0);

  auto two = isolate_roots(P({-2, 1}), 1e-12);
  // log 2 = 0.693147180559945309417 (mpmath)
  EXPECT_EQ(compare(log_plus_abs(two[0]), RealEnclosure::between(oracle::Q("693147180559945309417/1000000000000000000000"),
                                                                  oracle::Q("693147180559945309418/1000000000000000000000"))),
            Ordering::Overlap);
  EXPECT_LT(log_plus_abs(two[0]).width(), 1e-10);
  EXPECT_EQ(compare(log_plus_abs(two[0]), RealEnclosure::from_rational(Rational(693147, 1000000))), Ordering::Greater);
  EXPECT_EQ(compare(log_plus_abs(two[0]), RealEnclosure::from_rational(Rational(693148, 1000000))), Ordering::Less);

  // Roots on the unit circle: never negative, tiny above 0.
  for (const auto& b : isolate_roots(P({1, 0, 1}), 1e-10)) {
    RealEnclosure l = log_plus_abs(b);
    EXPECT_GE(mpfr_sgn(l.lo()), 0);
    EXPECT_LT(mpfr_get_d(l.hi(), MPFR_RNDU), 1e-9);
  }
}

TEST(Roots, RefinementNestsAndIsDeterministic) {
  IntPolynomial f = kLehmer;
  auto coarse = isolate_roots(f, 1e-4);
  auto fine = isolate_roots(f, 1e-20);
  auto again = isolate_roots(f, 1e-20);
  ASSERT_EQ(coarse.size(), fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) {
    EXPECT_LE(fine[i].width(), coarse[i].width());
    EXPECT_TRUE(coarse[i].re.contains(fine[i].center.re));
    EXPECT_TRUE(coarse[i].im.contains(fine[i].center.im));
    EXPECT_EQ(mpfr_cmp(fine[i].center.re.lo(), again[i].center.re.lo()), 0);
    EXPECT_EQ(mpfr_cmp(fine[i].center.im.lo(), again[i].center.im.lo()), 0);
  }
}

TEST(Roots, RejectsBadInput) {
  EXPECT_THROW(isolate_roots(P({1, 2, 1}), 1e-10), DomainError);
  EXPECT_THROW(isolate_roots(P({3}), 1e-10), DomainError);
}
