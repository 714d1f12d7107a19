#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weilcert/polynomial.hpp"

namespace weilcert {

/// Euler's totient by trial-division factorization.
std::uint64_t totient(std::uint64_t n);

/// phi(0..max) by a linear sieve; entry 0 is 0.
std::vector<std::uint32_t> totient_table(std::uint32_t max);

/// The n-th cyclotomic polynomial, n >= 1.
IntPolynomial cyclotomic_polynomial(unsigned n);

/// Smallest n with f | x^n - 1, searched over n <= 2 d^2 with phi(n) = d
/// (phi(n) >= sqrt(n/2) bounds the search). Divisibility is decided exactly
/// by reducing x^n modulo f. A value n means the roots of f are primitive
/// n-th roots of unity.
std::optional<unsigned long> cyclotomic_test(const IntPolynomial& f);

}  // namespace weilcert
