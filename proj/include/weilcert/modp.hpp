#pragma once

// Polynomials over small prime fields: distinct-degree factorization and the
// degree-set irreducibility sieve built on it.

#include <cstdint>
#include <span>
#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/polynomial.hpp"

namespace weilcert {

/// Raised when the prime divides the leading coefficient or the reduction is
/// not squarefree.
class BadPrimeError : public Error {
 public:
  using Error::Error;
};

/// Degrees of the irreducible factors of p mod prime, sorted ascending.
/// Distinct-degree factorization only; equal degrees are not split further
/// but counted as (class degree / i) copies of i.
std::vector<int> modp_factor_degrees(const IntPolynomial& p, std::uint32_t prime);

enum class SieveResult { Certified, Unknown };

/// Irreducibility over Q by intersecting the sets of possible factor degrees
/// across the given primes. Bad primes are skipped. Unknown is not a proof
/// of reducibility.
SieveResult irreducibility_sieve(const IntPolynomial& p, std::span<const std::uint32_t> primes);

/// The first `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

}  // namespace weilcert
