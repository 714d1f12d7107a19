#include "weilcert/lll.hpp"

namespace weilcert {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

class IntegralLLL {
 public:
  IntegralLLL(std::vector<IntVector> rows, const Rational& delta)
      : n_(static_cast<int>(rows.size())), p_(delta.get_num()), q_(delta.get_den()) {
    b_.resize(n_ + 1);
    for (int i = 0; i < n_; ++i) b_[i + 1] = std::move(rows[i]);
    d_.assign(n_ + 1, Integer(0));
    lam_.assign(n_ + 1, std::vector<Integer>(n_ + 1, Integer(0)));
  }

  std::vector<IntVector> run() {
    d_[0] = 1;
    if (n_ == 0) return {};
    d_[1] = dot(b_[1], b_[1]);
    if (d_[1] == 0) throw DomainError("lll_reduce: linearly dependent rows");
    int k = 2, kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        incorporate(k);
      }
      reduce(k, k - 1);
      const Integer lhs = q_ * (d_[k] * d_[k - 2] + lam_[k][k - 1] * lam_[k][k - 1]);
      const Integer rhs = p_ * d_[k - 1] * d_[k - 1];
      if (lhs < rhs) {
        swap(k, kmax);
        k = std::max(2, k - 1);
      } else {
        for (int l = k - 2; l >= 1; --l) reduce(k, l);
        ++k;
      }
    }
    std::vector<IntVector> out(b_.begin() + 1, b_.end());
    return out;
  }

 private:
  void incorporate(int k) {
    for (int j = 1; j <= k; ++j) {
      Integer u = dot(b_[k], b_[j]);
      for (int i = 1; i < j; ++i) {
        u = d_[i] * u - lam_[k][i] * lam_[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        lam_[k][j] = u;
      } else {
        d_[k] = u;
        if (u == 0) throw DomainError("lll_reduce: linearly dependent rows");
      }
    }
  }

  void reduce(int k, int l) {
    Integer twice = 2 * lam_[k][l];
    if (abs(twice) <= d_[l]) return;
    // nearest integer to lam / d, ties toward +inf
    Integer num = twice + d_[l];
    Integer den = 2 * d_[l];
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t c = 0; c < b_[k].size(); ++c) b_[k][c] -= r * b_[l][c];
    lam_[k][l] -= r * d_[l];
    for (int i = 1; i < l; ++i) lam_[k][i] -= r * lam_[l][i];
  }

  void swap(int k, int kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (int j = 1; j <= k - 2; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const Integer lam = lam_[k][k - 1];
    Integer B = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (int i = k + 1; i <= kmax; ++i) {
      const Integer t = lam_[i][k];
      Integer a = d_[k] * lam_[i][k - 1] - lam * t;
      mpz_divexact(lam_[i][k].get_mpz_t(), a.get_mpz_t(), d_[k - 1].get_mpz_t());
      Integer c = B * t + lam * lam_[i][k];
      mpz_divexact(lam_[i][k - 1].get_mpz_t(), c.get_mpz_t(), d_[k].get_mpz_t());
    }
    d_[k - 1] = B;
  }

  int n_;
  Integer p_, q_;
  std::vector<IntVector> b_;
  std::vector<Integer> d_;
  std::vector<std::vector<Integer>> lam_;
};

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) throw DomainError("lll_reduce: delta must lie in (1/4, 1)");
  if (!basis.rows.empty()) {
    const std::size_t m = basis.rows.front().size();
    for (const auto& r : basis.rows)
      if (r.size() != m) throw DomainError("lll_reduce: rows of different length");
    if (basis.rows.size() > m) throw DomainError("lll_reduce: linearly dependent rows");
  }
  IntegralLLL lll(basis.rows, delta);
  return LatticeBasis{lll.run()};
}

}  // namespace weilcert
