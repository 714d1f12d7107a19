#pragma once

// Outward-rounded interval arithmetic on MPFR endpoints.
//
// Every operation returns an enclosure of the exact image of its operands.
// The result precision is the larger of the operand precisions; rounding
// direction is chosen per endpoint, so no global rounding state is touched.

#include <mpfr.h>

#include <string>

#include "weilcert/error.hpp"
#include "weilcert/polynomial.hpp"

namespace weilcert {

inline constexpr long kDefaultPrecision = 128;
inline constexpr long kDefaultPrecisionCap = 4096;

class RealEnclosure {
 public:
  /// The point [0, 0].
  explicit RealEnclosure(long precision = kDefaultPrecision);
  RealEnclosure(const RealEnclosure& o);
  RealEnclosure(RealEnclosure&& o) noexcept;
  RealEnclosure& operator=(const RealEnclosure& o);
  RealEnclosure& operator=(RealEnclosure&& o) noexcept;
  ~RealEnclosure();

  static RealEnclosure from_integer(const Integer& v, long precision = kDefaultPrecision);
  static RealEnclosure from_rational(const Rational& v, long precision = kDefaultPrecision);
  /// Exact: every double is a dyadic rational.
  static RealEnclosure from_double(double v, long precision = kDefaultPrecision);
  /// [lo, hi] rounded outward. Throws DomainError if lo > hi.
  static RealEnclosure between(const Rational& lo, const Rational& hi, long precision = kDefaultPrecision);
  /// Enclosure of [lo, hi] given as MPFR values, rounded outward to `precision`.
  static RealEnclosure between(mpfr_srcptr lo, mpfr_srcptr hi, long precision);
  static RealEnclosure pi(long precision = kDefaultPrecision);

  long precision() const { return static_cast<long>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  double lo_down() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_up() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid() const;
  /// hi - lo rounded up.
  double width() const;

  bool contains(const Rational& v) const;
  bool contains(const RealEnclosure& inner) const;
  bool contains_zero() const;
  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

  /// Same interval re-rounded outward to another precision.
  RealEnclosure with_precision(long precision) const;

  /// "[lo, hi]" with `digits` significant digits, rounded outward.
  std::string to_string(int digits = 17) const;

  friend RealEnclosure operator+(const RealEnclosure& x, const RealEnclosure& y);
  friend RealEnclosure operator-(const RealEnclosure& x, const RealEnclosure& y);
  friend RealEnclosure operator*(const RealEnclosure& x, const RealEnclosure& y);
  /// Throws DomainError when 0 is in y.
  friend RealEnclosure operator/(const RealEnclosure& x, const RealEnclosure& y);
  friend RealEnclosure operator-(const RealEnclosure& x);

  friend RealEnclosure abs(const RealEnclosure& x);
  friend RealEnclosure max(const RealEnclosure& x, const RealEnclosure& y);
  friend RealEnclosure min(const RealEnclosure& x, const RealEnclosure& y);
  friend RealEnclosure hull(const RealEnclosure& x, const RealEnclosure& y);
  friend RealEnclosure sqr(const RealEnclosure& x);
  friend RealEnclosure sqrt(const RealEnclosure& x);
  friend RealEnclosure log(const RealEnclosure& x);
  friend RealEnclosure exp(const RealEnclosure& x);
  friend RealEnclosure pow(const RealEnclosure& x, long n);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

RealEnclosure operator+(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure operator-(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure operator*(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure operator/(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure operator-(const RealEnclosure& x);
RealEnclosure abs(const RealEnclosure& x);
RealEnclosure max(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure min(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure hull(const RealEnclosure& x, const RealEnclosure& y);
RealEnclosure sqr(const RealEnclosure& x);
/// Requires x.lo >= 0.
RealEnclosure sqrt(const RealEnclosure& x);
/// Requires x.lo > 0.
RealEnclosure log(const RealEnclosure& x);
RealEnclosure exp(const RealEnclosure& x);
/// Integer power; negative n requires 0 not in x.
RealEnclosure pow(const RealEnclosure& x, long n);
/// Rational power. Non-integer exponents require x.lo > 0.
RealEnclosure pow(const RealEnclosure& x, const Rational& e);

RealEnclosure operator*(const RealEnclosure& x, long s);
RealEnclosure operator+(const RealEnclosure& x, long s);

enum class Ordering { Less, Greater, Overlap };

/// Less iff x.hi < y.lo, Greater iff x.lo > y.hi, Overlap otherwise.
Ordering compare(const RealEnclosure& x, const RealEnclosure& y);

/// Rectangular complex enclosure.
struct ComplexEnclosure {
  RealEnclosure re;
  RealEnclosure im;

  explicit ComplexEnclosure(long precision = kDefaultPrecision) : re(precision), im(precision) {}
  ComplexEnclosure(RealEnclosure r, RealEnclosure i) : re(std::move(r)), im(std::move(i)) {}

  /// |z|^2 as an enclosure.
  RealEnclosure norm() const { return sqr(re) + sqr(im); }
  RealEnclosure abs() const { return sqrt(norm()); }
  bool intersects(const ComplexEnclosure& o) const;
};

ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b);
ComplexEnclosure operator-(const ComplexEnclosure& a, const ComplexEnclosure& b);
ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b);

/// Horner evaluation of a rational polynomial on a complex enclosure.
ComplexEnclosure evaluate(const RatPolynomial& p, const ComplexEnclosure& z);
ComplexEnclosure evaluate(const IntPolynomial& p, const ComplexEnclosure& z);

}  // namespace weilcert
