#include "weilcert/field_element.hpp"

namespace weilcert {

Modulus::Modulus(IntPolynomial f) : poly_(std::move(f)) {
  if (poly_.is_constant()) throw DomainError("modulus must be nonconstant");
  monic_ = to_rational(poly_);
  monic_ *= Rational(1) / monic_.leading();
}

RatPolynomial Modulus::reduce(RatPolynomial p) const {
  const int d = degree();
  if (p.degree() < d) return p;
  std::vector<Rational> r = p.coeffs();
  const auto& m = monic_.coeffs();
  Rational c;
  for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
    if (r[k] == 0) continue;
    c = r[k];
    for (int j = 0; j < d; ++j) r[k - d + j] -= c * m[j];
    r[k] = 0;
  }
  r.resize(d);
  return RatPolynomial(std::move(r));
}

std::shared_ptr<const Modulus> make_modulus(const IntPolynomial& f) {
  return std::make_shared<const Modulus>(f);
}

FieldElement::FieldElement(std::shared_ptr<const Modulus> modulus, RatPolynomial rep)
    : modulus_(std::move(modulus)), rep_(modulus_->reduce(std::move(rep))) {}

FieldElement FieldElement::constant(std::shared_ptr<const Modulus> modulus, const Rational& c) {
  return FieldElement(std::move(modulus), RatPolynomial::constant(c));
}

FieldElement FieldElement::generator(std::shared_ptr<const Modulus> modulus) {
  return FieldElement(std::move(modulus), RatPolynomial::monomial(Rational(1), 1));
}

void FieldElement::check_same(const FieldElement& o) const {
  if (modulus_ != o.modulus_ && modulus_->poly() != o.modulus_->poly()) throw ModulusMismatchError();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return FieldElement(a.modulus_, a.rep_ + b.rep_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return FieldElement(a.modulus_, a.rep_ - b.rep_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return FieldElement(a.modulus_, a.rep_ * b.rep_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.rep_ == b.rep_;
}

FieldElement FieldElement::inverse() const {
  // extended Euclid: s*rep + t*f = g
  RatPolynomial r0 = modulus_->monic(), r1 = rep_;
  RatPolynomial s0, s1 = RatPolynomial::constant(Rational(1));
  if (r1.is_zero()) throw NonInvertibleError(modulus_->poly());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() > 0) throw NonInvertibleError(clear_denominators(r0));
  s0 *= Rational(1) / r0.leading();
  return FieldElement(modulus_, std::move(s0));
}

FieldElement elem_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement elem_pow(const FieldElement& a, long exponent) {
  FieldElement base = exponent < 0 ? a.inverse() : a;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
  FieldElement result = FieldElement::constant(a.modulus(), Rational(1));
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement evaluate(const RatPolynomial& p, const FieldElement& a) {
  FieldElement acc = FieldElement::constant(a.modulus(), Rational(0));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * a + FieldElement::constant(a.modulus(), *it);
  return acc;
}

}  // namespace weilcert
