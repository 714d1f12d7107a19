#include "weilcert/height.hpp"

#include "weilcert/cyclotomic.hpp"
#include "weilcert/modp.hpp"
#include "weilcert/roots.hpp"

namespace weilcert {

const char* to_string(Irreducibility status) {
  switch (status) {
    case Irreducibility::Certified:
      return "certified";
    case Irreducibility::Assumed:
      return "assumed";
    case Irreducibility::NotIrreducible:
      return "not-irreducible";
  }
  return "?";
}

namespace {

HeightResult zero_height(int degree, long precision) {
  HeightResult r;
  r.h = RealEnclosure(precision);
  r.mahler_log = RealEnclosure(precision);
  r.exact_zero = true;
  r.degree = degree;
  return r;
}

// Landau: M(f) <= ||f||_2, so 0 <= h <= log ||f||_2 / d.
RealEnclosure landau_enclosure(const IntPolynomial& f, long precision) {
  Integer sumsq = 0;
  for (const auto& c : f.coeffs()) sumsq += c * c;
  const RealEnclosure upper = log(RealEnclosure::from_integer(sumsq, precision)) * RealEnclosure::from_rational(Rational(1, 2), precision);
  return hull(RealEnclosure(precision), upper);
}

}  // namespace

HeightResult weil_height(const IntPolynomial& input, const HeightOptions& options) {
  if (input.is_constant()) throw DomainError("weil_height: constant polynomial");
  const IntPolynomial f = primitive_part(input).primitive;
  const int d = f.degree();
  const long P0 = options.precision;

  const auto primes = first_primes(25);
  const Irreducibility irr =
      irreducibility_sieve(f, primes) == SieveResult::Certified ? Irreducibility::Certified : Irreducibility::Assumed;

  if (f == IntPolynomial{0, 1}) {
    HeightResult r = zero_height(d, P0);
    r.irreducibility = irr;
    return r;
  }
  if (auto n = cyclotomic_test(f)) {
    HeightResult r = zero_height(d, P0);
    r.root_of_unity_order = n;
    r.irreducibility = irr;
    return r;
  }
  if (!squarefree_check(f)) throw DomainError("weil_height: non-squarefree polynomial");

  HeightResult r;
  r.degree = d;
  r.irreducibility = irr;
  const RealEnclosure dd = RealEnclosure::from_integer(d, P0);
  double root_width = options.target_width;
  bool have_enclosure = false;
  for (long prec = P0; prec <= options.precision_cap; prec *= 2) {
    std::vector<ComplexBox> boxes;
    try {
      boxes = isolate_roots(f, root_width, {prec, options.precision_cap});
    } catch (const IndeterminateError&) {
      break;
    }
    RealEnclosure mahler = log(abs(RealEnclosure::from_integer(f.leading(), prec)));
    for (const auto& b : boxes) mahler = mahler + log_plus_abs(b);
    RealEnclosure h = max(mahler / dd, RealEnclosure(prec));
    const bool done = h.width() <= options.target_width;
    r.mahler_log = std::move(mahler);
    r.h = std::move(h);
    have_enclosure = true;
    if (done) return r;
    root_width /= 16;
  }
  r.indeterminate = true;
  if (!have_enclosure) {
    r.mahler_log = landau_enclosure(f, P0);
    r.h = r.mahler_log / dd;
  }
  return r;
}

RealEnclosure smyth_reference(long precision) {
  HeightOptions opts;
  opts.precision = precision;
  return weil_height(IntPolynomial{-1, -1, 0, 1}, opts).h;
}

}  // namespace weilcert
