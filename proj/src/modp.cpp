#include "weilcert/modp.hpp"

#include <algorithm>

namespace weilcert {

namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, trimmed

struct Field {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 inv(u64 a) const {
    u64 r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntPolynomial& f, u64 p) {
  Poly out;
  out.reserve(f.coeffs().size());
  Integer m;
  const Integer pz = static_cast<unsigned long>(p);
  for (const auto& c : f.coeffs()) {
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    out.push_back(m.get_ui());
  }
  trim(out);
  return out;
}

// a mod b, b nonzero
Poly mod(Poly a, const Poly& b, const Field& F) {
  const int db = deg(b);
  const u64 inv = F.inv(b.back());
  for (int k = deg(a); k >= db; --k) {
    const u64 c = F.mul(a[k], inv);
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]));
  }
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(db)));
  trim(a);
  return a;
}

Poly divide(Poly a, const Poly& b, const Field& F) {
  const int db = deg(b);
  Poly q(deg(a) - db + 1, 0);
  const u64 inv = F.inv(b.back());
  for (int k = deg(a); k >= db; --k) {
    const u64 c = F.mul(a[k], inv);
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]));
  }
  trim(q);
  return q;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return mod(std::move(r), m, F);
}

Poly powmod(Poly base, u64 e, const Poly& m, const Field& F) {
  Poly r{1};
  r = mod(r, m, F);
  base = mod(std::move(base), m, F);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, F);
    base = mulmod(base, base, m, F);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, const Field& F) {
  while (!b.empty()) {
    Poly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

Poly derivative(const Poly& a, const Field& F) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.p));
  trim(d);
  return d;
}

}  // namespace

std::vector<int> modp_factor_degrees(const IntPolynomial& p, std::uint32_t prime) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  const Field F{prime};
  Poly f = reduce(p, prime);
  if (deg(f) != p.degree()) throw BadPrimeError("bad prime: divides the leading coefficient");
  if (deg(f) == 0) return {};
  if (deg(gcd(f, derivative(f, F), F)) != 0) throw BadPrimeError("bad prime: not squarefree mod p");

  std::vector<int> degrees;
  Poly x{0, 1};
  Poly h = mod(x, f, F);
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, prime, f, F);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], 1);
    trim(hx);
    Poly g = gcd(hx, f, F);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / i; ++k) degrees.push_back(i);
      f = divide(f, g, F);
      h = mod(h, f, F);
    }
  }
  if (deg(f) > 0) degrees.push_back(deg(f));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

SieveResult irreducibility_sieve(const IntPolynomial& p, std::span<const std::uint32_t> primes) {
  const int n = p.degree();
  if (n < 1) throw DomainError("irreducibility_sieve: constant polynomial");
  // possible[k]: a factor of degree k over Q is still consistent
  std::vector<char> possible(n + 1, 1);
  possible[0] = 0;
  auto done = [&] {
    return std::count(possible.begin(), possible.begin() + n, 1) == 0;
  };
  if (done()) return SieveResult::Certified;
  for (std::uint32_t q : primes) {
    std::vector<int> degs;
    try {
      degs = modp_factor_degrees(p, q);
    } catch (const BadPrimeError&) {
      continue;
    }
    std::vector<char> sums(n + 1, 0);
    sums[0] = 1;
    for (int dg : degs)
      for (int s = n; s >= dg; --s)
        if (sums[s - dg]) sums[s] = 1;
    for (int k = 1; k <= n; ++k) possible[k] = possible[k] && sums[k];
    if (done()) return SieveResult::Certified;
  }
  return SieveResult::Unknown;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 2; out.size() < count; ++c) {
    bool prime = true;
    for (std::uint32_t q : out) {
      if (q * q > c) break;
      if (c % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

}  // namespace weilcert
