#pragma once

// Independent reference computations used by the tests. Each one is a
// direct, slow transcription of a definition, sharing no code with the
// library routine it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weilcert/lll.hpp"
#include "weilcert/polynomial.hpp"

namespace oracle {

using weilcert::Integer;
using weilcert::IntPolynomial;
using weilcert::IntVector;
using weilcert::Rational;

/// Canonical rational from "p/q" text.
inline Rational Q(const std::string& text) {
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

/// Determinant by fraction-free Bareiss elimination.
inline Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(size), std::vector<Integer>(static_cast<std::size_t>(size), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = p.coeff(static_cast<std::size_t>(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = q.coeff(static_cast<std::size_t>(n - j));
  return determinant(std::move(s));
}

/// Remainder of a by b over Q, with rational coefficients.
inline std::vector<Rational> rat_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  auto deg = [](const std::vector<Rational>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  };
  const int db = deg(b);
  for (int da = deg(a); da >= db; da = deg(a)) {
    Rational c = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
  }
  a.resize(static_cast<std::size_t>(std::max(deg(a), 0) + 1));
  return a;
}

/// Number of distinct real roots of a squarefree f by Sturm's theorem
/// (sign changes at -inf minus sign changes at +inf).
inline int sturm_real_roots(const IntPolynomial& f) {
  std::vector<std::vector<Rational>> seq;
  std::vector<Rational> p0, p1;
  for (const auto& c : f.coeffs()) p0.emplace_back(c);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) p1.emplace_back(Rational(f.coeffs()[i] * static_cast<long>(i)));
  seq.push_back(p0);
  seq.push_back(p1);
  for (;;) {
    auto r = rat_rem(seq[seq.size() - 2], seq.back());
    bool zero = true;
    for (auto& c : r)
      if (c != 0) zero = false;
    if (zero) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  auto sign_at = [](const std::vector<Rational>& p, bool plus_inf) {
    int d = static_cast<int>(p.size()) - 1;
    while (d > 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    int s = sgn(p[static_cast<std::size_t>(d)]);
    if (!plus_inf && d % 2 == 1) s = -s;
    return s;
  };
  auto changes = [&](bool plus_inf) {
    int count = 0, last = 0;
    for (auto& p : seq) {
      int s = sign_at(p, plus_inf);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

/// Roots of f in F_p by exhaustive evaluation.
inline int roots_mod_p(const IntPolynomial& f, std::uint32_t p) {
  int count = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    Integer v = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) v = (v * x + *it) % p;
    if (v % p == 0) ++count;
  }
  return count;
}

/// Exact Gram-Schmidt data: squared norms B_i and coefficients mu_ij.
struct GramSchmidt {
  std::vector<Rational> norms;
  std::vector<std::vector<Rational>> mu;
};

inline GramSchmidt gram_schmidt(const std::vector<IntVector>& rows) {
  const std::size_t n = rows.size();
  GramSchmidt g;
  std::vector<std::vector<Rational>> star(n);
  g.mu.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(rows[i].begin(), rows[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational num = 0;
      for (std::size_t k = 0; k < rows[i].size(); ++k) num += Rational(rows[i][k]) * star[j][k];
      g.mu[i][j] = num / g.norms[j];
      for (std::size_t k = 0; k < rows[i].size(); ++k) star[i][k] -= g.mu[i][j] * star[j][k];
    }
    Rational b = 0;
    for (auto& x : star[i]) b += x * x;
    g.norms.push_back(b);
  }
  return g;
}

/// Size reduction |mu_ij| <= 1/2 and the Lovasz condition at delta.
inline bool is_lll_reduced(const std::vector<IntVector>& rows, const Rational& delta) {
  auto g = gram_schmidt(rows);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(g.mu[i][j]) > Rational(1, 2)) return false;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    Rational m = g.mu[k][k - 1];
    if (g.norms[k] < (delta - m * m) * g.norms[k - 1]) return false;
  }
  return true;
}

/// Determinant of the Gram matrix (squared covolume).
inline Integer gram_determinant(const std::vector<IntVector>& rows) {
  std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m[i][j] = weilcert::dot(rows[i], rows[j]);
  return determinant(std::move(m));
}

inline IntPolynomial random_polynomial(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = dist(rng);
  while (c.back() == 0) c.back() = dist(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace oracle
