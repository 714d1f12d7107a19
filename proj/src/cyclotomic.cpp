#include "weilcert/cyclotomic.hpp"

#include <map>

#include "weilcert/field_element.hpp"

namespace weilcert {

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint32_t> totient_table(std::uint32_t max) {
  std::vector<std::uint32_t> phi(static_cast<std::size_t>(max) + 1, 0);
  std::vector<std::uint32_t> primes;
  if (max >= 1) phi[1] = 1;
  for (std::uint64_t i = 2; i <= max; ++i) {
    if (phi[i] == 0) {
      phi[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > max) break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return phi;
}

IntPolynomial cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Phi_m for every proper divisor m of n
  std::map<unsigned, IntPolynomial> cache;
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    RatPolynomial q = to_rational(IntPolynomial::monomial(Integer(1), m) - IntPolynomial::constant(Integer(1)));
    for (const auto& [k, phi_k] : cache)
      if (m % k == 0) q = divmod(q, to_rational(phi_k)).first;
    cache[m] = clear_denominators(q);
  }
  return cache[n];
}

std::optional<unsigned long> cyclotomic_test(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 1) return std::nullopt;
  const auto mod = make_modulus(f);
  const FieldElement x = FieldElement::generator(mod);
  const unsigned long limit = 2ul * d * d;
  for (unsigned long n = 1; n <= limit; ++n) {
    if (totient(n) != static_cast<std::uint64_t>(d)) continue;
    if (elem_pow(x, static_cast<long>(n)).is_one()) return n;
  }
  return std::nullopt;
}

}  // namespace weilcert
