#pragma once

#include <optional>

#include "weilcert/polynomial.hpp"
#include "weilcert/real.hpp"

namespace weilcert {

enum class Irreducibility { Certified, Assumed, NotIrreducible };

const char* to_string(Irreducibility status);

/// Absolute logarithmic Weil height of a root of f, in nats.
struct HeightResult {
  RealEnclosure h;
  bool exact_zero = false;
  int degree = 0;
  /// log M(f) = log|a| + sum log max(1, |alpha_i|); h = mahler_log / degree.
  RealEnclosure mahler_log;
  /// Set when the Kronecker certificate found alpha to be a root of unity.
  std::optional<unsigned long> root_of_unity_order;
  /// Target width not reached before the precision cap.
  bool indeterminate = false;
  /// From the degree sieve only; callers may refine it.
  Irreducibility irreducibility = Irreducibility::Assumed;
};

struct HeightOptions {
  double target_width = 1e-12;
  long precision = kDefaultPrecision;
  long precision_cap = kDefaultPrecisionCap;
};

/// Height of the algebraic number with minimal polynomial f. f is normalized
/// to its primitive part. h is exactly [0, 0] only through an exact
/// certificate: f = x, or f divides x^n - 1. Throws DomainError for constant
/// or non-squarefree f.
HeightResult weil_height(const IntPolynomial& f, const HeightOptions& options = {});

/// h(theta) for the real root theta > 1 of x^3 - x - 1, Smyth's constant
/// for non-reciprocal numbers (3 h(theta) = log theta).
RealEnclosure smyth_reference(long precision = kDefaultPrecision);

}  // namespace weilcert
