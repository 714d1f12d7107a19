#include "weilcert/polynomial.hpp"

#include <sstream>

namespace weilcert {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IntPolynomial exact_div(const IntPolynomial& p, const Integer& s) {
  std::vector<Integer> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return IntPolynomial(std::move(v));
}

}  // namespace

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

PrimitiveDecomposition primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  PrimitiveDecomposition out;
  out.content = content(p);
  out.sign = sgn(p.leading()) < 0 ? -1 : 1;
  out.primitive = exact_div(p, out.content);
  if (out.sign < 0) out.primitive = -out.primitive;
  return out;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial clear_denominators(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer t = l / c.get_den();
    v.emplace_back(t * c.get_num());
  }
  return primitive_part(IntPolynomial(std::move(v))).primitive;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = r[k + db] * inv_lead;
    q[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = b.leading();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[k];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
    r.pop_back();
    --e;
  }
  IntPolynomial out(std::move(r));
  if (e > 0) out *= ipow(lb, static_cast<unsigned long>(e));
  return out;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  return divmod(to_rational(a), to_rational(b)).second.is_zero();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return primitive_part(b).primitive;
  if (b.is_zero()) return primitive_part(a).primitive;
  IntPolynomial u = primitive_part(a).primitive;
  IntPolynomial v = primitive_part(b).primitive;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : primitive_part(r).primitive;
  }
  return primitive_part(u).primitive;
}

bool squarefree_check(const IntPolynomial& p) {
  if (p.is_constant()) throw DomainError("squarefree_check: constant polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_constant()) throw DomainError("squarefree_part: constant polynomial");
  const IntPolynomial g = gcd(p, p.derivative());
  auto [q, r] = divmod(to_rational(p), to_rational(g));
  return clear_denominators(q);
}

Integer resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  IntPolynomial a = p, b = q;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return s * ipow(b.leading(), a.degree());

  const Integer ca = content(a), cb = content(b);
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  const Integer t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  Integer g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = exact_div(r, g * ipow(h, delta));
    g = a.leading();
    // h <- h^(1 - delta) g^delta, exact since delta >= 1
    Integer num = ipow(g, delta);
    Integer den = ipow(h, delta - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (b.degree() == 0) {
      Integer n2 = ipow(b.leading(), a.degree());
      Integer d2 = ipow(h, a.degree() - 1);
      Integer last;
      mpz_divexact(last.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
      return s * t * last;
    }
  }
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coeffs()[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::string to_coefficient_list(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

}  // namespace weilcert
