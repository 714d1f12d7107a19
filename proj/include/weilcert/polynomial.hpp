#pragma once

// Dense univariate polynomials with exact coefficients.
//
// Coefficients are stored in ascending degree order and the vector is kept
// trimmed, so the zero polynomial has no coefficients and degree -1.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "weilcert/error.hpp"

namespace weilcert {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// p = sign * content * primitive, with content > 0 and the primitive part
/// having coprime coefficients and a positive leading coefficient.
struct PrimitiveDecomposition {
  Integer content;
  IntPolynomial primitive;
  int sign = 1;
};

/// Throws DomainError("zero polynomial") on the zero polynomial.
PrimitiveDecomposition primitive_part(const IntPolynomial& p);

Integer content(const IntPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);

/// Primitive integer polynomial proportional to p (positive leading coefficient).
IntPolynomial clear_denominators(const RatPolynomial& p);

/// Euclidean division over Q. Throws DomainError when b is zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// True iff b divides a in Q[x]. b must be nonzero.
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Primitive gcd over Q (positive leading coefficient); gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// True iff gcd(p, p') is constant. Throws DomainError on constant input.
bool squarefree_check(const IntPolynomial& p);

/// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Res(p, q) = lc(p)^deg q * prod q(root of p), by the subresultant PRS.
Integer resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Human-readable form such as "x^2 - x - 1".
std::string to_string(const IntPolynomial& p);

/// Comma-separated coefficients, constant term first ("-1,-1,1").
std::string to_coefficient_list(const IntPolynomial& p);

}  // namespace weilcert
