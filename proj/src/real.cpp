#include "weilcert/real.hpp"

#include <algorithm>
#include <vector>

namespace weilcert {

namespace {

long joint(const RealEnclosure& x, const RealEnclosure& y) { return std::max(x.precision(), y.precision()); }

// mpfr_mul yields NaN for 0 * inf; the exact product of the finite factor
// with an unbounded endpoint is approached from the finite side, so 0 is the
// right endpoint candidate.
void mul_dir(mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
  mpfr_mul(r, a, b, rnd);
  if (mpfr_nan_p(r)) mpfr_set_zero(r, 1);
}

// Upper endpoint from a downward-rounded image of a point: exact results
// collapse, otherwise the true value lies within one ulp above.
void point_image(mpfr_ptr lo, mpfr_ptr hi, int ternary) {
  mpfr_set(hi, lo, MPFR_RNDU);
  if (ternary != 0) mpfr_nextabove(hi);
}

}  // namespace

RealEnclosure::RealEnclosure(long precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealEnclosure::RealEnclosure(const RealEnclosure& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealEnclosure::RealEnclosure(RealEnclosure&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealEnclosure& RealEnclosure::operator=(const RealEnclosure& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
  mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

RealEnclosure& RealEnclosure::operator=(RealEnclosure&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

RealEnclosure::~RealEnclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealEnclosure RealEnclosure::from_integer(const Integer& v, long precision) {
  RealEnclosure r(precision);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_rational(const Rational& v, long precision) {
  RealEnclosure r(precision);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_double(double v, long precision) {
  RealEnclosure r(precision);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::between(const Rational& lo, const Rational& hi, long precision) {
  if (lo > hi) throw DomainError("enclosure with lo > hi");
  RealEnclosure r(precision);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::between(mpfr_srcptr lo, mpfr_srcptr hi, long precision) {
  if (mpfr_greater_p(lo, hi)) throw DomainError("enclosure with lo > hi");
  RealEnclosure r(precision);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::pi(long precision) {
  RealEnclosure r(precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double RealEnclosure::mid() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double out = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

double RealEnclosure::width() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

bool RealEnclosure::contains(const Rational& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RealEnclosure::contains(const RealEnclosure& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool RealEnclosure::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

RealEnclosure RealEnclosure::with_precision(long precision) const { return between(lo_, hi_, precision); }

std::string RealEnclosure::to_string(int digits) const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*RDe", digits - 1, lo_);
  mpfr_asprintf(&b, "%.*RUe", digits - 1, hi_);
  std::string out = std::string("[") + a + ", " + b + "]";
  mpfr_free_str(a);
  mpfr_free_str(b);
  return out;
}

RealEnclosure operator+(const RealEnclosure& x, const RealEnclosure& y) {
  RealEnclosure r(joint(x, y));
  mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure operator-(const RealEnclosure& x, const RealEnclosure& y) {
  RealEnclosure r(joint(x, y));
  mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
  return r;
}

RealEnclosure operator-(const RealEnclosure& x) {
  RealEnclosure r(x.precision());
  mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  return r;
}

RealEnclosure operator*(const RealEnclosure& x, const RealEnclosure& y) {
  const long prec = joint(x, y);
  RealEnclosure r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr xs[2] = {x.lo_, x.hi_};
  mpfr_srcptr ys[2] = {y.lo_, y.hi_};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (auto a : xs) {
    for (auto b : ys) {
      mul_dir(t, a, b, MPFR_RNDD);
      mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
      mul_dir(t, a, b, MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return r;
}

RealEnclosure operator/(const RealEnclosure& x, const RealEnclosure& y) {
  if (y.contains_zero()) throw DomainError("division by an enclosure containing 0");
  const long prec = joint(x, y);
  RealEnclosure r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr xs[2] = {x.lo_, x.hi_};
  mpfr_srcptr ys[2] = {y.lo_, y.hi_};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (auto a : xs) {
    for (auto b : ys) {
      mpfr_div(t, a, b, MPFR_RNDD);
      if (!mpfr_nan_p(t)) mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
      mpfr_div(t, a, b, MPFR_RNDU);
      if (!mpfr_nan_p(t)) mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return r;
}

RealEnclosure abs(const RealEnclosure& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  RealEnclosure r(x.precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure max(const RealEnclosure& x, const RealEnclosure& y) {
  RealEnclosure r(joint(x, y));
  mpfr_max(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure min(const RealEnclosure& x, const RealEnclosure& y) {
  RealEnclosure r(joint(x, y));
  mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure hull(const RealEnclosure& x, const RealEnclosure& y) {
  RealEnclosure r(joint(x, y));
  mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure sqr(const RealEnclosure& x) {
  const RealEnclosure a = abs(x);
  RealEnclosure r(x.precision());
  mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure sqrt(const RealEnclosure& x) {
  if (mpfr_sgn(x.lo_) < 0) throw DomainError("sqrt of an enclosure reaching below 0");
  RealEnclosure r(x.precision());
  if (x.is_point()) {
    point_image(r.lo_, r.hi_, mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD));
    return r;
  }
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure log(const RealEnclosure& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("log of an enclosure reaching 0 or below");
  RealEnclosure r(x.precision());
  if (x.is_point()) {
    point_image(r.lo_, r.hi_, mpfr_log(r.lo_, x.lo_, MPFR_RNDD));
    return r;
  }
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure exp(const RealEnclosure& x) {
  RealEnclosure r(x.precision());
  if (x.is_point()) {
    point_image(r.lo_, r.hi_, mpfr_exp(r.lo_, x.lo_, MPFR_RNDD));
    return r;
  }
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure pow(const RealEnclosure& x, long n) {
  if (n == 0) return RealEnclosure::from_integer(1, x.precision());
  if (n < 0) return RealEnclosure::from_integer(1, x.precision()) / pow(x, -n);
  RealEnclosure r(x.precision());
  if (n % 2 == 0) {
    const RealEnclosure a = abs(x);
    mpfr_pow_ui(r.lo_, a.lo_, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.hi_, static_cast<unsigned long>(n), MPFR_RNDU);
  } else {
    mpfr_pow_ui(r.lo_, x.lo_, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, static_cast<unsigned long>(n), MPFR_RNDU);
  }
  return r;
}

RealEnclosure pow(const RealEnclosure& x, const Rational& e) {
  if (e.get_den() == 1 && e.get_num().fits_slong_p()) return pow(x, e.get_num().get_si());
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("non-integer power of an enclosure reaching 0 or below");
  return exp(RealEnclosure::from_rational(e, x.precision()) * log(x));
}

RealEnclosure operator*(const RealEnclosure& x, long s) { return x * RealEnclosure::from_integer(s, x.precision()); }
RealEnclosure operator+(const RealEnclosure& x, long s) { return x + RealEnclosure::from_integer(s, x.precision()); }

Ordering compare(const RealEnclosure& x, const RealEnclosure& y) {
  if (mpfr_less_p(x.hi(), y.lo())) return Ordering::Less;
  if (mpfr_greater_p(x.lo(), y.hi())) return Ordering::Greater;
  return Ordering::Overlap;
}

bool ComplexEnclosure::intersects(const ComplexEnclosure& o) const {
  return mpfr_lessequal_p(re.lo(), o.re.hi()) && mpfr_lessequal_p(o.re.lo(), re.hi()) &&
         mpfr_lessequal_p(im.lo(), o.im.hi()) && mpfr_lessequal_p(o.im.lo(), im.hi());
}

ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexEnclosure operator-(const ComplexEnclosure& a, const ComplexEnclosure& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexEnclosure evaluate(const RatPolynomial& p, const ComplexEnclosure& z) {
  const long prec = z.re.precision();
  ComplexEnclosure acc(prec);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + RealEnclosure::from_rational(*it, prec);
  }
  return acc;
}

ComplexEnclosure evaluate(const IntPolynomial& p, const ComplexEnclosure& z) {
  const long prec = z.re.precision();
  ComplexEnclosure acc(prec);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + RealEnclosure::from_integer(*it, prec);
  }
  return acc;
}

}  // namespace weilcert
