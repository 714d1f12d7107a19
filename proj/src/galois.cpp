#include "weilcert/galois.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "weilcert/cyclotomic.hpp"

namespace weilcert {

namespace {

constexpr std::size_t kElementBitBudget = std::size_t{1} << 22;

// round(mid(v) * 2^shift)
Integer scaled_round(const RealEnclosure& v, long shift) {
  mpfr_t m;
  mpfr_init2(m, v.precision() + 2);
  mpfr_add(m, v.lo(), v.hi(), MPFR_RNDN);
  mpfr_mul_2si(m, m, shift - 1, MPFR_RNDN);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), m, MPFR_RNDN);
  mpfr_clear(m);
  return z;
}

std::size_t bit_size(const RatPolynomial& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coeffs())
    bits += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  return bits;
}

long max_coefficient_bits(const IntPolynomial& f) {
  std::size_t bits = 1;
  for (const auto& c : f.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return static_cast<long>(bits);
}

// Root enclosures tight enough that values of powers up to a^(d-1) are
// known to well beyond `bits` fractional bits.
class RootCache {
 public:
  RootCache(IntPolynomial f, const GaloisOptions& o) : f_(std::move(f)), cap_(o.precision_cap) {
    guard_ = 32 + static_cast<long>(f_.degree()) * (max_coefficient_bits(f_) + 1);
  }

  const std::vector<ComplexBox>& at(long bits) {
    auto it = cache_.find(bits);
    if (it != cache_.end()) return it->second;
    const long work = bits + guard_;
    RootOptions ro{work, 8 * (cap_ + guard_)};
    auto boxes = isolate_roots(f_, std::ldexp(1.0, -static_cast<int>(std::min<long>(work - 16, 1000))), ro);
    return cache_.emplace(bits, std::move(boxes)).first->second;
  }

 private:
  IntPolynomial f_;
  long cap_;
  long guard_;
  std::map<long, std::vector<ComplexBox>> cache_;
};

std::optional<int> locate(const RatPolynomial& p, const std::vector<ComplexBox>& roots, int base) {
  const ComplexEnclosure image = evaluate(p, roots[base].box());
  std::optional<int> hit;
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    if (!image.intersects(roots[k].box())) continue;
    if (hit) return std::nullopt;
    hit = k;
  }
  return hit;
}

ExpressionSearch search_expression(const IntPolynomial& f, int base, int target, const GaloisOptions& o, RootCache& cache) {
  const int d = f.degree();
  const int n = d + 1;
  ExpressionSearch out;
  for (long prec = o.precision; prec <= o.precision_cap; prec *= 2) {
    out.precision = prec;
    const auto& roots = cache.at(prec);
    const ComplexEnclosure a = roots[base].center;
    const ComplexEnclosure t = roots[target].center;
    const bool real = roots[base].real && roots[target].real;
    const long work = a.re.precision();

    std::vector<ComplexEnclosure> values;
    ComplexEnclosure pw(RealEnclosure::from_integer(1, work), RealEnclosure(work));
    for (int j = 0; j < d; ++j) {
      values.push_back(pw);
      pw = pw * a;
    }
    values.emplace_back(-t.re, -t.im);

    LatticeBasis basis;
    for (int j = 0; j < n; ++j) {
      IntVector row(n, Integer(0));
      row[j] = 1;
      row.push_back(scaled_round(values[j].re, prec));
      if (!real) row.push_back(scaled_round(values[j].im, prec));
      basis.rows.push_back(std::move(row));
    }
    const LatticeBasis reduced = lll_reduce(basis);

    for (const auto& row : reduced.rows) {
      const Integer& cd = row[d];
      if (cd == 0) continue;
      bool bounded = true;
      for (int j = 0; j < n; ++j)
        if (abs(row[j]) > o.height_bound) bounded = false;
      if (!bounded) continue;
      std::vector<Rational> coeffs(d);
      for (int j = 0; j < d; ++j) {
        coeffs[j] = Rational(row[j], cd);
        coeffs[j].canonicalize();
      }
      RatPolynomial p(std::move(coeffs));
      if (!verify_expression(f, p)) continue;
      if (locate(p, roots, base) != std::optional<int>(target)) continue;
      out.status = SearchStatus::Found;
      out.expression = ConjugateExpression{target, std::move(p), true};
      return out;
    }

    // An integer relation with entries bounded by H has squared length at
    // most n H^2 + (n H)^2 after rounding; LLL with delta = 99/100 keeps the
    // first vector within (100/74)^((n-1)/2) of the shortest one.
    const Integer first = dot(reduced.rows.front(), reduced.rows.front());
    Integer lhs, rhs, a74, a100;
    mpz_ui_pow_ui(a74.get_mpz_t(), 74, n - 1);
    mpz_ui_pow_ui(a100.get_mpz_t(), 100, n - 1);
    lhs = first * a74;
    rhs = a100 * (n * o.height_bound * o.height_bound + n * n * o.height_bound * o.height_bound);
    if (lhs > rhs) {
      out.status = SearchStatus::None;
      return out;
    }
  }
  out.status = SearchStatus::Indeterminate;
  return out;
}

}  // namespace

bool verify_expression(const IntPolynomial& f, const RatPolynomial& p) {
  const auto mod = make_modulus(f);
  return evaluate(to_rational(f), FieldElement(mod, p)).is_zero();
}

ExpressionSearch express_conjugate(const IntPolynomial& f, int base, int target, const GaloisOptions& options) {
  const int d = f.degree();
  if (base < 0 || base >= d || target < 0 || target >= d) throw DomainError("express_conjugate: root index out of range");
  RootCache cache(f, options);
  return search_expression(f, base, target, options, cache);
}

GaloisResult is_galois(const IntPolynomial& input, const GaloisOptions& options) {
  const IntPolynomial f = primitive_part(input).primitive;
  const int d = f.degree();
  if (d < 1) throw DomainError("is_galois: constant polynomial");
  GaloisResult result;
  result.height_bound = options.height_bound;
  result.precision = options.precision;
  const RatPolynomial identity = RatPolynomial::monomial(Rational(1), 1);
  if (d == 1) {
    result.certified = true;
    result.expressions.push_back({0, identity, true});
    return result;
  }

  const auto mod = make_modulus(f);
  RootCache cache(f, options);
  const auto& roots = cache.at(options.precision);
  std::vector<std::optional<RatPolynomial>> known(d);
  known[0] = identity;
  std::vector<RatPolynomial> generators;

  auto close = [&]() {
    std::deque<int> queue;
    for (int i = 0; i < d; ++i)
      if (known[i]) queue.push_back(i);
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      const FieldElement q(mod, *known[i]);
      for (const auto& g : generators) {
        RatPolynomial comp = evaluate(g, q).rep();
        const auto at = locate(comp, roots, 0);
        if (!at || known[*at]) continue;
        if (!verify_expression(f, comp)) continue;
        known[*at] = std::move(comp);
        queue.push_back(*at);
      }
    }
  };

  for (int target = 1; target < d; ++target) {
    if (known[target]) continue;
    ExpressionSearch s = search_expression(f, 0, target, options, cache);
    result.precision = std::max(result.precision, s.precision);
    if (s.status != SearchStatus::Found) {
      result.failure = s.status;
      return result;
    }
    known[target] = s.expression->expression;
    generators.push_back(s.expression->expression);
    close();
  }
  result.certified = true;
  for (int i = 0; i < d; ++i) result.expressions.push_back({i, *known[i], true});
  return result;
}

std::optional<unsigned long> unit_order(const FieldElement& g, int degree) {
  if (g.is_zero()) throw DomainError("unit_order: zero element");
  const unsigned long limit = 2ul * degree * degree;
  for (unsigned long n = 1; n <= limit; ++n) {
    if (static_cast<unsigned long>(degree) % totient(n) != 0) continue;
    if (elem_pow(g, static_cast<long>(n)).is_one()) return n;
  }
  return std::nullopt;
}

int rank_of(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (const auto& x : v) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  const std::size_t cols = m.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::optional<FieldElement> relation_product(const std::vector<FieldElement>& conj, const IntVector& e, bool& over_budget) {
  FieldElement prod = FieldElement::constant(conj.front().modulus(), Rational(1));
  for (std::size_t i = 0; i < conj.size(); ++i) {
    if (e[i] == 0) continue;
    prod = prod * elem_pow(conj[i], e[i].get_si());
    if (bit_size(prod.rep()) > kElementBitBudget) {
      over_budget = true;
      return std::nullopt;
    }
  }
  return prod;
}

}  // namespace

bool verify_relation(const IntPolynomial& f, const std::vector<ConjugateExpression>& expressions, const Relation& r) {
  const auto mod = make_modulus(primitive_part(f).primitive);
  std::vector<FieldElement> conj;
  for (const auto& e : expressions) conj.emplace_back(mod, e.expression);
  bool over = false;
  const auto prod = relation_product(conj, r.exponents, over);
  if (!prod || r.order == 0) return false;
  if (!elem_pow(*prod, static_cast<long>(r.order)).is_one()) return false;
  const auto n = unit_order(*prod, f.degree());
  return n && *n == r.order;
}

RelationSearch find_relations(const IntPolynomial& input, const std::vector<ConjugateExpression>& expressions,
                              const GaloisOptions& options) {
  const IntPolynomial f = primitive_part(input).primitive;
  const int d = f.degree();
  if (static_cast<int>(expressions.size()) != d) throw DomainError("find_relations: need one expression per conjugate");
  if (f == IntPolynomial{0, 1}) throw DomainError("find_relations: alpha = 0");
  const auto mod = make_modulus(f);
  std::vector<FieldElement> conj;
  for (const auto& e : expressions) conj.emplace_back(mod, e.expression);

  RelationSearch out;
  if (cyclotomic_test(f)) {
    for (int i = 0; i < d; ++i) {
      const auto n = unit_order(conj[i], d);
      if (!n) continue;
      IntVector e(d, Integer(0));
      e[i] = 1;
      out.relations.push_back({std::move(e), *n});
    }
    out.numeric_rank = d;
    return out;
  }

  RootCache cache(f, options);
  const auto& roots = cache.at(options.precision);
  const long shift = options.precision / 2;
  LatticeBasis basis;
  for (int i = 0; i < d; ++i) {
    IntVector row(d, Integer(0));
    row[i] = 1;
    for (int j = 0; j < d; ++j) {
      const ComplexEnclosure v = evaluate(expressions[i].expression, roots[j].box());
      row.push_back(scaled_round(log(v.abs()), shift));
    }
    basis.rows.push_back(std::move(row));
  }
  const LatticeBasis reduced = lll_reduce(basis);

  std::vector<IntVector> certified;
  std::vector<IntVector> small_rows;
  auto try_candidate = [&](IntVector e) {
    for (const auto& x : e)
      if (abs(x) > options.relation_bound) return;
    std::vector<IntVector> trial = certified;
    trial.push_back(e);
    if (rank_of(trial) <= static_cast<int>(certified.size())) return;
    bool over = false;
    std::optional<FieldElement> prod;
    try {
      prod = relation_product(conj, e, over);
    } catch (const NonInvertibleError&) {
      out.partial = true;
      return;
    }
    if (over) out.partial = true;
    if (!prod) return;
    const auto n = unit_order(*prod, d);
    if (!n) return;
    certified.push_back(e);
    out.relations.push_back({std::move(e), *n});
  };
  for (const auto& row : reduced.rows) {
    IntVector e(row.begin(), row.begin() + d);
    Integer l1 = 0;
    bool bounded = true;
    for (const auto& x : e) {
      l1 += abs(x);
      if (abs(x) > options.relation_bound) bounded = false;
    }
    bool small = true;
    for (int j = d; j < 2 * d; ++j)
      if (abs(row[j]) > l1 + 1) small = false;
    if (!small || l1 == 0) continue;
    ++out.numeric_rank;
    small_rows.push_back(e);
    if (bounded) try_candidate(std::move(e));
  }

  // Numbers with every archimedean absolute value 1 need not be torsion
  // when they are not integral, so small rows can mix torsion and
  // non-torsion directions. Try short {-1, 0, 1} combinations of them.
  const std::size_t k = small_rows.size();
  if (k >= 2 && k <= 6 && certified.size() < k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    for (std::size_t code = 1; code < total && certified.size() < k; ++code) {
      IntVector e(d, Integer(0));
      std::size_t c = code;
      int first = 0;
      int used = 0;
      for (std::size_t i = 0; i < k; ++i, c /= 3) {
        int coef = static_cast<int>(c % 3) - 1;
        if (coef == 0) continue;
        if (first == 0) first = coef;
        ++used;
        for (int j = 0; j < d; ++j) e[j] += coef * small_rows[i][j];
      }
      if (first != 1 || used < 2) continue;
      try_candidate(std::move(e));
    }
  }
  return out;
}

RankEstimate mult_rank(const IntPolynomial& input, const std::vector<ConjugateExpression>& expressions,
                       const GaloisOptions& options) {
  const IntPolynomial f = primitive_part(input).primitive;
  const int d = f.degree();
  RelationSearch rs = find_relations(f, expressions, options);
  RankEstimate est;
  est.num_conjugates = d;
  est.search_bound = options.relation_bound;
  est.partial = rs.partial;
  std::vector<IntVector> vs;
  for (const auto& r : rs.relations) vs.push_back(r.exponents);
  est.rank_upper_certified = d - rank_of(vs);
  est.rank_heuristic = std::min(d - rs.numeric_rank, est.rank_upper_certified);
  if (!cyclotomic_test(f)) est.rank_heuristic = std::max(1, est.rank_heuristic);
  est.relation_basis = std::move(rs.relations);
  return est;
}

std::optional<RankEstimate> mult_rank(const IntPolynomial& f, const GaloisOptions& options) {
  const GaloisResult g = is_galois(f, options);
  if (!g.certified) return std::nullopt;
  return mult_rank(f, g.expressions, options);
}

}  // namespace weilcert
