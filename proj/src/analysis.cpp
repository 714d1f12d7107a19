#include "weilcert/analysis.hpp"

#include <cmath>

#include "weilcert/bounds.hpp"
#include "weilcert/cyclotomic.hpp"
#include "weilcert/error.hpp"
#include "weilcert/modp.hpp"
#include "weilcert/roots.hpp"

namespace weilcert {

namespace {

// The unique integer in x, if x holds exactly one.
std::optional<Integer> unique_integer(const RealEnclosure& x) {
  Integer lo, hi;
  mpfr_get_z(lo.get_mpz_t(), x.lo(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), x.hi(), MPFR_RNDD);
  if (lo != hi) return std::nullopt;
  return lo;
}

bool proper_factor(const IntPolynomial& g, const IntPolynomial& f) {
  return g.degree() >= 1 && g.degree() < f.degree() && divides(g, f);
}

// A rational root p/q of primitive f has q | a, so a * root is an integer;
// likewise a times the elementary symmetric functions of a rational
// quadratic factor's roots.
bool numeric_factor(const IntPolynomial& f) {
  const Integer& a = f.leading();
  double scale = std::max(1.0, std::fabs(a.get_d()));
  Integer bound = 0;
  for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, Integer(abs(f.coeff(i))));
  double width = 1e-12 / (scale * (2.0 + bound.get_d() / scale));
  if (!(width > 1e-300)) return false;
  std::vector<ComplexBox> roots;
  try {
    roots = isolate_roots(f, width);
  } catch (const IndeterminateError&) {
    return false;
  }
  RealEnclosure A = RealEnclosure::from_integer(a, roots.front().re.precision());
  for (const ComplexBox& r : roots) {
    if (!r.real) continue;
    if (auto m = unique_integer(A * r.re)) {
      if (proper_factor(primitive_part(IntPolynomial({-*m, a})).primitive, f)) return true;
    }
  }
  if (f.degree() < 3) return false;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const ComplexBox& u = roots[i];
      const ComplexBox& v = roots[j];
      RealEnclosure s(u.re.precision()), p(u.re.precision());
      if (u.real && v.real) {
        s = u.re + v.re;
        p = u.re * v.re;
      } else if (!u.real && !v.real && (u.im + v.im).contains_zero() && (u.re - v.re).contains_zero()) {
        s = u.re * 2;
        p = u.box().norm();
      } else {
        continue;
      }
      auto ms = unique_integer(A * s);
      auto mp = unique_integer(A * p);
      if (!ms || !mp) continue;
      if (proper_factor(primitive_part(IntPolynomial({*mp, -*ms, a})).primitive, f)) return true;
    }
  }
  return false;
}

}  // namespace

Irreducibility irreducibility(const IntPolynomial& f) {
  if (f.degree() < 1) throw DomainError("irreducibility of a constant");
  if (f.degree() == 1) return Irreducibility::Certified;
  if (f.coeff(0) == 0) return Irreducibility::NotIrreducible;
  if (!squarefree_check(f)) return Irreducibility::NotIrreducible;
  IntPolynomial g = primitive_part(f).primitive;
  auto primes = first_primes(25);
  if (irreducibility_sieve(g, primes) == SieveResult::Certified) return Irreducibility::Certified;
  // Phi_n is irreducible over Q.
  if (auto n = cyclotomic_test(g); n && cyclotomic_polynomial(static_cast<unsigned>(*n)) == g)
    return Irreducibility::Certified;
  if (numeric_factor(g)) return Irreducibility::NotIrreducible;
  return Irreducibility::Assumed;
}

const char* to_string(GaloisStatus s) {
  switch (s) {
    case GaloisStatus::Certified: return "certified";
    case GaloisStatus::NoWitness: return "no-witness";
    case GaloisStatus::Indeterminate: return "indeterminate";
    case GaloisStatus::Skipped: return "skipped";
  }
  return "?";
}

Analysis analyze(const IntPolynomial& input, const AnalysisOptions& options) {
  if (input.degree() < 1) throw DomainError(input.degree() < 0 ? "zero polynomial" : "constant polynomial");
  Analysis r;
  r.poly = primitive_part(input).primitive;
  r.degree = r.poly.degree();
  const IntPolynomial& f = r.poly;
  try {
    r.log_main_bound = main_bound(Integer(r.degree), options.height.precision);
    r.irreducibility = irreducibility(f);
    if (r.irreducibility == Irreducibility::NotIrreducible) {
      r.status = "not-irreducible";
      return r;
    }
    r.height = weil_height(f, options.height);
    r.height->irreducibility = r.irreducibility;
    r.root_of_unity_order = r.height->root_of_unity_order;
    if (r.height->indeterminate) {
      r.status = "indeterminate";
      r.notes.push_back("height enclosure wider than target at precision cap");
    }

    GaloisResult g = is_galois(f, options.galois);
    r.galois = g.certified ? GaloisStatus::Certified
               : g.failure == SearchStatus::Indeterminate ? GaloisStatus::Indeterminate
                                                          : GaloisStatus::NoWitness;
    if (g.certified) r.rank = mult_rank(f, g.expressions, options.galois);
    r.galois_detail = std::move(g);
    if (r.galois == GaloisStatus::Indeterminate) {
      r.status = "indeterminate";
      r.notes.push_back("Galois search reached the precision cap");
    }

    if (r.height->exact_zero) {
      r.notes.push_back("root of unity or zero: theorem hypothesis not met");
    } else if (r.galois != GaloisStatus::Certified) {
      r.notes.push_back("no Galois certificate: bound comparison skipped");
    } else if (mpfr_sgn(r.height->h.lo()) > 0) {
      RealEnclosure h = r.height->h.with_precision(options.height.precision);
      RealEnclosure ln10 = log(RealEnclosure::from_integer(10, options.height.precision));
      r.margin_log10 = (log(h) - *r.log_main_bound) / ln10;
    } else {
      r.status = "indeterminate";
      r.notes.push_back("height enclosure reaches 0");
    }
  } catch (const IndeterminateError& e) {
    r.status = "indeterminate";
    r.notes.push_back(e.what());
  } catch (const Error& e) {
    r.status = "error";
    r.notes.push_back(e.what());
  }
  return r;
}

}  // namespace weilcert
