#pragma once

// Elements of Q[x]/(f). The ring is a field only when f is irreducible;
// inversion of a zero divisor reports the common factor it uncovered.

#include <memory>

#include "weilcert/error.hpp"
#include "weilcert/polynomial.hpp"

namespace weilcert {

class ModulusMismatchError : public Error {
 public:
  ModulusMismatchError() : Error("field elements have different moduli") {}
};

/// The element shares a nontrivial factor with the modulus. The factor is a
/// witness that the modulus is reducible.
class NonInvertibleError : public Error {
 public:
  explicit NonInvertibleError(IntPolynomial factor)
      : Error("element is not invertible; modulus has factor " + to_string(factor)),
        factor_(std::move(factor)) {}
  const IntPolynomial& factor() const { return factor_; }

 private:
  IntPolynomial factor_;
};

class Modulus {
 public:
  /// Throws DomainError if f is constant.
  explicit Modulus(IntPolynomial f);

  const IntPolynomial& poly() const { return poly_; }
  const RatPolynomial& monic() const { return monic_; }
  int degree() const { return poly_.degree(); }

  /// Remainder of p modulo f.
  RatPolynomial reduce(RatPolynomial p) const;

 private:
  IntPolynomial poly_;
  RatPolynomial monic_;
};

class FieldElement {
 public:
  FieldElement(std::shared_ptr<const Modulus> modulus, RatPolynomial rep);

  static FieldElement constant(std::shared_ptr<const Modulus> modulus, const Rational& c);
  static FieldElement generator(std::shared_ptr<const Modulus> modulus);

  const RatPolynomial& rep() const { return rep_; }
  const std::shared_ptr<const Modulus>& modulus() const { return modulus_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.degree() == 0 && rep_.leading() == 1; }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same(const FieldElement& o) const;

  std::shared_ptr<const Modulus> modulus_;
  RatPolynomial rep_;
};

std::shared_ptr<const Modulus> make_modulus(const IntPolynomial& f);

FieldElement elem_mul(const FieldElement& a, const FieldElement& b);

/// Binary exponentiation; negative exponents go through inverse().
FieldElement elem_pow(const FieldElement& a, long exponent);

/// p(x) evaluated at x = a, i.e. the composition p(a) in Q[x]/(f).
FieldElement evaluate(const RatPolynomial& p, const FieldElement& a);

}  // namespace weilcert
