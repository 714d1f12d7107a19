#include "weilcert/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "weilcert/cyclotomic.hpp"
#include "weilcert/error.hpp"

namespace weilcert {

namespace {

using Enc = RealEnclosure;

Enc num(long v, long prec) { return Enc::from_integer(v, prec); }
Enc num(const Integer& v, long prec) { return Enc::from_integer(v, prec); }
Enc num(const Rational& v, long prec) { return Enc::from_rational(v, prec); }
Enc log_of(long v, long prec) { return log(num(v, prec)); }
Enc log_of(const Integer& v, long prec) { return log(num(v, prec)); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Logarithms of d that every chain step shares.
struct DegreeLogs {
  Enc log_d;
  Enc log_3d;
  Enc ll_3d;       // log log 3d
  Enc log_ll_6d2;  // log log log 6d^2
  Enc t;           // log(3d)^(1/4)
  Enc t3;          // log(3d)^(3/4)

  DegreeLogs(const Integer& d, long prec)
      : log_d(log_of(d, prec)),
        log_3d(log_of(Integer(3 * d), prec)),
        ll_3d(log(log_3d)),
        log_ll_6d2(log(log(log_of(Integer(6 * d * d), prec)))),
        t(exp(ll_3d * num(Rational(1, 4), prec))),
        t3(exp(ll_3d * num(Rational(3, 4), prec))) {}
};

Enc main_bound_log(const DegreeLogs& L, long prec) {
  return -(log_of(10, prec) * 8) - num(Rational(49, 2), prec) * L.t3 * L.ll_3d;
}

Enc g2_log(int rho, const DegreeLogs& L, long prec) {
  return log_of(65000000, prec) + log_of(rho, prec) * (rho + 5) + L.log_ll_6d2 * 5;
}

Enc g1_term_log(int r, const DegreeLogs& L, long prec) {
  Integer base = Integer(1050) * Integer(r) * r * r * r * r;
  long e = static_cast<long>(r) * (r + 1) * (r + 1);
  return L.log_d / num(r, prec) + (log_of(base, prec) + L.ll_3d) * e;
}

// Prefix minima of the g1 terms over r = 1..rho_max.
std::vector<G1Value> g1_prefix(int rho_max, const DegreeLogs& L, long prec) {
  std::vector<G1Value> out;
  out.reserve(static_cast<std::size_t>(rho_max));
  for (int r = 1; r <= rho_max; ++r) {
    Enc term = g1_term_log(r, L, prec);
    if (out.empty()) {
      out.push_back({term, r});
      continue;
    }
    const G1Value& prev = out.back();
    G1Value next{min(prev.log_value, term), prev.argmin};
    if (mpfr_cmp(term.hi(), prev.log_value.hi()) < 0) next.argmin = r;
    out.push_back(std::move(next));
  }
  return out;
}

// Decides LHS <= RHS from log enclosures, doubling precision on overlap.
ChainVerdict decide(std::string id, ParameterPoint point, const std::function<std::pair<Enc, Enc>(long)>& eval,
                    const PrecisionPolicy& policy) {
  ChainVerdict v;
  v.id = std::move(id);
  v.point = std::move(point);
  for (long prec = policy.precision;; prec *= 2) {
    auto [lhs, rhs] = eval(prec);
    v.margin = rhs - lhs;
    v.log_lhs = lhs;
    v.log_rhs = rhs;
    Ordering o = compare(lhs, rhs);
    if (o == Ordering::Less) {
      v.verdict = Verdict::Holds;
      return v;
    }
    if (o == Ordering::Greater) {
      v.verdict = Verdict::Fails;
      return v;
    }
    if (prec * 2 > policy.precision_cap) break;
  }
  v.verdict = Verdict::Indeterminate;
  return v;
}

ChainVerdict exact_verdict(std::string id, ParameterPoint point, const Integer& lhs, const Integer& rhs) {
  ChainVerdict v;
  v.id = std::move(id);
  v.point = std::move(point);
  int c = cmp(lhs, rhs);
  v.verdict = c <= 0 ? Verdict::Holds : Verdict::Fails;
  v.equality = c == 0;
  long prec = kDefaultPrecision;
  v.log_lhs = log_of(lhs, prec);
  v.log_rhs = log_of(rhs, prec);
  if (c == 0) {
    v.margin = Enc(prec);
  } else {
    Rational q(rhs, lhs);
    q.canonicalize();
    v.margin = log(num(q, prec));
  }
  return v;
}

ParameterPoint rho_point(int rho) {
  ParameterPoint p;
  p.rho = rho;
  return p;
}

ParameterPoint chain_point(const GridPoint& g, bool with_eps) {
  ParameterPoint p;
  p.d = g.d;
  p.rho = g.rho;
  if (with_eps) p.eps = g.eps;
  return p;
}

// Per-degree evaluator; caches the shared logarithms per precision.
class DegreeAuditor {
 public:
  DegreeAuditor(Integer d, int rho_max) : d_(std::move(d)), rho_max_(std::max(rho_max, 1)) {}

  const DegreeLogs& logs(long prec) {
    auto it = logs_.find(prec);
    if (it == logs_.end()) it = logs_.emplace(prec, DegreeLogs(d_, prec)).first;
    return it->second;
  }

  const G1Value& g1(int rho, long prec) {
    auto it = g1_.find(prec);
    if (it == g1_.end()) it = g1_.emplace(prec, g1_prefix(rho_max_, logs(prec), prec)).first;
    return it->second.at(static_cast<std::size_t>(rho - 1));
  }

  // Whether rho <= log(3d)^(1/4); rho^4 = log 3d never holds exactly.
  std::optional<bool> rho_below_t(int rho, const PrecisionPolicy& policy) {
    for (long prec = policy.precision; prec <= policy.precision_cap; prec *= 2) {
      Ordering o = compare(num(rho, prec), logs(prec).t);
      if (o == Ordering::Less) return true;
      if (o == Ordering::Greater) return false;
    }
    return std::nullopt;
  }

  std::vector<ChainVerdict> audit(const GridPoint& g, const ChainOptions& opt) {
    std::vector<ChainVerdict> out;
    const PrecisionPolicy& pol = opt.policy;
    int rho = g.rho;
    auto want = [&](char c) { return opt.steps.find(c) != std::string::npos; };
    if (want('a')) {
      ChainVerdict v = constant_step_check(rho, pol);
      v.point = chain_point(g, false);
      out.push_back(std::move(v));
    }
    if (want('b')) {
      ChainVerdict v = nrho_check(rho);
      v.point = chain_point(g, false);
      out.push_back(std::move(v));
    }
    if (want('c')) {
      out.push_back(decide("c", chain_point(g, false), [&](long prec) {
        const DegreeLogs& L = logs(prec);
        Enc log_x = log_of(1440, prec) + log_of(rho, prec) * rho + L.log_ll_6d2;
        Enc lhs = log_x + log(log_of(2, prec) + log_x) * 4;
        return std::make_pair(lhs, g2_log(rho, L, prec));
      }, pol));
    }
    if (want('d') || want('e')) {
      std::optional<bool> below = rho_below_t(rho, pol);
      bool run_d = !below.has_value() || *below;
      bool run_e = !below.has_value() || !*below;
      if (want('d') && run_d) {
        out.push_back(decide("d", chain_point(g, false), [&](long prec) {
          const DegreeLogs& L = logs(prec);
          Enc rhs = log_of(65000000, prec) + num(Rational(7, 2), prec) * L.t * L.ll_3d;
          return std::make_pair(g2_log(rho, L, prec), rhs);
        }, pol));
      }
      if (want('e') && run_e) {
        out.push_back(decide("e", chain_point(g, false), [&](long prec) {
          const DegreeLogs& L = logs(prec);
          Enc rhs = log_of(31693, prec) + L.t3 + num(Rational(27, 2), prec) * L.t3 * L.ll_3d;
          return std::make_pair(g1(rho, prec).log_value, rhs);
        }, pol));
      }
    }
    if (want('f')) {
      out.push_back(decide("f", chain_point(g, false), [&](long prec) {
        const DegreeLogs& L = logs(prec);
        Enc lhs = min(g1(rho, prec).log_value, g2_log(rho, L, prec));
        Enc rhs = log_of(65000000, prec) + num(Rational(49, 2), prec) * L.t3 * L.ll_3d;
        return std::make_pair(lhs, rhs);
      }, pol));
    }
    if (want('g') && g.eps) {
      out.push_back(decide("g", chain_point(g, true), [&](long prec) {
        const DegreeLogs& L = logs(prec);
        Enc lhs = c_eps_log(*g.eps, prec) - num(*g.eps, prec) * L.log_d;
        return std::make_pair(lhs, main_bound_log(L, prec));
      }, pol));
    }
    return out;
  }

 private:
  Integer d_;
  int rho_max_;
  std::map<long, DegreeLogs> logs_;
  std::map<long, std::vector<G1Value>> g1_;
};

// Groups point indices by degree, keeping first-appearance order.
std::vector<std::vector<std::size_t>> group_by_degree(const std::vector<GridPoint>& points) {
  std::vector<std::vector<std::size_t>> groups;
  std::map<Integer, std::size_t> slot;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, fresh] = slot.emplace(points[i].d, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

// Runs the auditor over each degree group on `jobs` threads; `sink` receives
// each group's verdicts (per point, in point order) under a lock.
void run_groups(const std::vector<GridPoint>& points, const ChainOptions& options,
                const std::function<void(std::size_t, std::vector<std::vector<ChainVerdict>>)>& sink) {
  for (const GridPoint& g : points) {
    if (g.d < 1) throw DomainError("degree must be at least 1");
    if (g.rho < 1) throw DomainError("rank must be at least 1");
    if (g.eps && *g.eps <= 0) throw DomainError("eps must be positive");
  }
  auto groups = group_by_degree(points);
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < groups.size(); k = next++) {
        int rho_max = 1;
        for (std::size_t i : groups[k]) rho_max = std::max(rho_max, points[i].rho);
        DegreeAuditor auditor(points[groups[k].front()].d, rho_max);
        std::vector<std::vector<ChainVerdict>> per_point;
        per_point.reserve(groups[k].size());
        for (std::size_t i : groups[k]) per_point.push_back(auditor.audit(points[i], options));
        std::lock_guard<std::mutex> g(lock);
        sink(k, std::move(per_point));
      }
    } catch (...) {
      std::lock_guard<std::mutex> g(lock);
      if (!failure) failure = std::current_exception();
      next = groups.size();
    }
  };
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

// log log log 3, cached per precision and thread.
const Enc& lll3(long prec) {
  thread_local std::map<long, Enc> cache;
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, log(log(log_of(3, prec)))).first;
  return it->second;
}

}  // namespace

Integer n_rho(int rho) {
  if (rho < 1) throw DomainError("n_rho needs rho >= 1");
  switch (rho) {
    case 2: return Integer(12);
    case 4: return Integer(1152);
    case 6: return Integer(103680);
    case 7: return Integer(2903040);
    case 8: return Integer(696729600);
    case 9: return Integer(1393459200);
    case 10: return Integer("8360755200");
    default: break;
  }
  Integer r = factorial(static_cast<unsigned>(rho));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(rho));
  return r;
}

std::optional<RealEnclosure> voutier(const Integer& d, long precision) {
  if (d < 3) return std::nullopt;
  Enc log_d = log_of(d, precision);
  Enc ll = log(log_d);
  return -log_of(Integer(4 * d), precision) + (log(ll) - log(log_d)) * 3;
}

RealEnclosure product_bound(int n, const Integer& D, long precision) {
  if (n < 1) throw DomainError("product_bound needs n >= 1");
  if (D < 1) throw DomainError("product_bound needs D >= 1");
  Integer n5 = Integer(n) * n * n * n * n;
  Integer e = Integer(n) * n * (n + 1) * (n + 1);
  Enc base = log_of(Integer(1050 * n5), precision) + log(log_of(Integer(3 * D), precision));
  return -log_of(D, precision) - base * num(e, precision);
}

RealEnclosure relative_dobrowolski(const RealEnclosure& D) {
  long p = D.precision();
  if (mpfr_cmp_ui(D.lo(), 1) < 0) throw DomainError("relative_dobrowolski needs D >= 1");
  Enc ll5 = log(log(D * 5));
  Enc l2 = log(D * 2);
  return -log(D) + log(ll5) * 3 - log(l2) * 4 + num(0L, p);
}

RealEnclosure relative_dobrowolski(const Integer& D, long precision) {
  return relative_dobrowolski(num(D, precision));
}

G1Value g1(int rho, const Integer& d, long precision) {
  if (rho < 1 || d < 1) throw DomainError("g1 needs rho >= 1 and d >= 1");
  DegreeLogs L(d, precision);
  return g1_prefix(rho, L, precision).back();
}

RealEnclosure g2(int rho, const Integer& d, long precision) {
  if (rho < 1 || d < 1) throw DomainError("g2 needs rho >= 1 and d >= 1");
  return g2_log(rho, DegreeLogs(d, precision), precision);
}

RealEnclosure main_bound(const Integer& d, long precision) {
  if (d < 1) throw DomainError("main_bound needs d >= 1");
  return main_bound_log(DegreeLogs(d, precision), precision);
}

RealEnclosure c_eps_log(const Rational& eps, long precision) {
  if (eps <= 0) throw DomainError("c_eps needs eps > 0");
  Rational u = Rational(724, 5) / eps;
  u.canonicalize();
  Rational u4 = u * u * u * u;
  Rational inner = 181 * u4 + u4 * u;
  return -(log_of(10, precision) * 8) - num(eps, precision) * log_of(3, precision) - num(inner, precision);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string ParameterPoint::to_string() const {
  std::ostringstream os;
  const char* sep = "";
  if (n) { os << sep << "n=" << *n; sep = " "; }
  if (d) { os << sep << "d=" << *d; sep = " "; }
  if (rho) { os << sep << "rho=" << *rho; sep = " "; }
  if (eps) { os << sep << "eps=" << *eps; }
  return os.str();
}

TotientVerdicts totient_lemma_check(std::uint64_t n, const PrecisionPolicy& policy) {
  return totient_lemma_check(n, totient(n), policy);
}

TotientVerdicts totient_lemma_check(std::uint64_t n, std::uint64_t phi, const PrecisionPolicy& policy) {
  if (n < 1) throw DomainError("totient check needs n >= 1");
  ParameterPoint point;
  point.n = Integer(static_cast<unsigned long>(n));
  TotientVerdicts out;
  if (n == 1) {
    out.ratio.id = "totient-ratio";
    out.ratio.point = point;
    out.ratio.verdict = Verdict::Holds;
    out.ratio.equality = true;
    out.ratio.margin = Enc(policy.precision);
    out.ratio.log_lhs = Enc(policy.precision);
    out.ratio.log_rhs = Enc(policy.precision);
  } else {
    Rational ratio(Integer(static_cast<unsigned long>(n)), Integer(static_cast<unsigned long>(phi)));
    ratio.canonicalize();
    Integer three_n = 3 * Integer(static_cast<unsigned long>(n));
    out.ratio = decide("totient-ratio", point, [&](long prec) {
      Enc lhs = log(num(ratio, prec)) + lll3(prec);
      Enc rhs = log(log(log_of(three_n, prec)));
      return std::make_pair(lhs, rhs);
    }, policy);
  }
  Integer p2(static_cast<unsigned long>(phi));
  out.sqrt_form = exact_verdict("totient-sqrt", point, Integer(static_cast<unsigned long>(n)), 2 * p2 * p2);
  return out;
}

ChainVerdict stirling_check(unsigned n, const PrecisionPolicy& policy) {
  return stirling_check(n, factorial(n), policy);
}

ChainVerdict stirling_check(unsigned n, const Integer& fact, const PrecisionPolicy& policy) {
  if (n < 1) throw DomainError("stirling check needs n >= 1");
  ParameterPoint point;
  point.n = Integer(n);
  return decide("stirling", point, [&](long prec) {
    Enc ln = log_of(static_cast<long>(n), prec);
    Enc lhs = log_of(fact, prec) - ln * static_cast<long>(n);
    Enc rhs = (log(Enc::pi(prec) * 2) + ln) * num(Rational(1, 2), prec) + num(Rational(1, 12 * n), prec) -
              num(static_cast<long>(n), prec);
    return std::make_pair(lhs, rhs);
  }, policy);
}

ChainVerdict nrho_check(int rho) {
  Integer rhs = 135 * factorial(static_cast<unsigned>(rho));
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(rho - 1));
  return exact_verdict("b", rho_point(rho), n_rho(rho), rhs);
}

ChainVerdict constant_step_check(int rho, const PrecisionPolicy& policy) {
  if (rho < 1) throw DomainError("constant step needs rho >= 1");
  return decide("a", rho_point(rho), [&](long prec) {
    Enc lr = log_of(rho, prec);
    Enc lhs = log_of(718, prec) + (log(Enc::pi(prec) * 2) + lr) * num(Rational(1, 2), prec) +
              num(Rational(1, 12 * rho), prec) + (log_of(2, prec) - num(1L, prec)) * rho;
    return std::make_pair(lhs, log_of(1440, prec));
  }, policy);
}

std::vector<ChainVerdict> verify_chain(const std::vector<GridPoint>& points, const ChainOptions& options) {
  auto groups = group_by_degree(points);
  std::vector<std::vector<ChainVerdict>> per_point(points.size());
  run_groups(points, options, [&](std::size_t k, std::vector<std::vector<ChainVerdict>> verdicts) {
    for (std::size_t j = 0; j < verdicts.size(); ++j) per_point[groups[k][j]] = std::move(verdicts[j]);
  });
  std::vector<ChainVerdict> out;
  for (auto& v : per_point)
    for (auto& c : v) out.push_back(std::move(c));
  return out;
}

bool expected_failure(const ChainVerdict& v) {
  if (v.id != "e" || v.verdict != Verdict::Fails || !v.point.d) return false;
  // log(3d) < 16  <=>  3d < e^16; decided on an enclosure of e^16.
  Enc e16 = exp(num(16L, 128));
  return compare(num(Integer(3 * *v.point.d), 128), e16) == Ordering::Less;
}

std::vector<Integer> default_degree_grid(int count, int max_exponent) {
  if (count < 2) throw DomainError("grid needs at least two points");
  std::vector<Integer> out;
  for (int d = 1; d <= 10; ++d) out.emplace_back(d);
  long prec = static_cast<long>(max_exponent) * 4 + 128;
  mpfr_t x;
  mpfr_init2(x, prec);
  for (int i = 0; i < count; ++i) {
    mpfr_set_si(x, static_cast<long>(max_exponent) * i, MPFR_RNDN);
    mpfr_div_si(x, x, count - 1, MPFR_RNDN);
    mpfr_exp10(x, x, MPFR_RNDN);
    Integer d;
    mpfr_get_z(d.get_mpz_t(), x, MPFR_RNDD);
    out.push_back(d);
  }
  mpfr_clear(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GridPoint> rank_grid(const std::vector<Integer>& degrees, int rho_max) {
  std::vector<GridPoint> out;
  for (const Integer& d : degrees) {
    int top = d < rho_max ? static_cast<int>(d.get_si()) : rho_max;
    for (int r = 1; r <= top; ++r) out.push_back({d, r, std::nullopt});
  }
  return out;
}

void SuiteSummary::add(ChainVerdict v) {
  if (v.equality) equalities.push_back(v);
  switch (v.verdict) {
    case Verdict::Holds: ++holds; break;
    case Verdict::Indeterminate:
      ++indeterminate;
      failures.push_back(std::move(v));
      break;
    case Verdict::Fails:
      if (expected_failure(v)) {
        ++expected_fails;
        expected.push_back(std::move(v));
      } else {
        ++fails;
        failures.push_back(std::move(v));
      }
      break;
  }
}

void SuiteSummary::merge(SuiteSummary o) {
  holds += o.holds;
  fails += o.fails;
  expected_fails += o.expected_fails;
  indeterminate += o.indeterminate;
  for (auto& v : o.failures) failures.push_back(std::move(v));
  for (auto& v : o.expected) expected.push_back(std::move(v));
  for (auto& v : o.equalities) equalities.push_back(std::move(v));
}

SuiteSummary verify_totient_range(std::uint64_t max_n, const PrecisionPolicy& policy) {
  if (max_n > 0xffffffffULL) throw DomainError("totient range too large");
  SuiteSummary s;
  s.suite = "totient";
  auto phi = totient_table(static_cast<std::uint32_t>(max_n));
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    auto v = totient_lemma_check(n, phi[n], policy);
    s.add(std::move(v.ratio));
    s.add(std::move(v.sqrt_form));
  }
  return s;
}

SuiteSummary verify_stirling_range(unsigned max_n, const PrecisionPolicy& policy) {
  SuiteSummary s;
  s.suite = "stirling";
  Integer fact = 1;
  for (unsigned n = 1; n <= max_n; ++n) {
    fact *= n;
    s.add(stirling_check(n, fact, policy));
  }
  return s;
}

SuiteSummary verify_nrho_range(int max_rho) {
  SuiteSummary s;
  s.suite = "nrho";
  for (int r = 1; r <= max_rho; ++r) s.add(nrho_check(r));
  return s;
}

SuiteSummary verify_constant_step_range(int max_rho, const PrecisionPolicy& policy) {
  SuiteSummary s;
  s.suite = "constant-step";
  for (int r = 1; r <= max_rho; ++r) s.add(constant_step_check(r, policy));
  return s;
}

std::vector<SuiteSummary> verify_chain_summary(const std::vector<GridPoint>& points, const ChainOptions& options) {
  std::vector<SuiteSummary> out;
  for (char c : options.steps) {
    SuiteSummary s;
    s.suite = std::string("chain-") + c;
    out.push_back(std::move(s));
  }
  // Per-group tallies keep the failure lists in input order.
  auto groups = group_by_degree(points);
  std::vector<std::vector<SuiteSummary>> partial(groups.size());
  run_groups(points, options, [&](std::size_t k, std::vector<std::vector<ChainVerdict>> verdicts) {
    std::vector<SuiteSummary> local(out.size());
    for (auto& per : verdicts)
      for (auto& v : per) {
        std::size_t slot = options.steps.find(v.id[0]);
        local[slot].add(std::move(v));
      }
    partial[k] = std::move(local);
  });
  for (auto& local : partial)
    for (std::size_t i = 0; i < local.size(); ++i) out[i].merge(std::move(local[i]));
  return out;
}

std::optional<std::string> decimal_value(const RealEnclosure& log_value, int digits) {
  if (mpfr_cmp_si(log_value.lo(), -700) <= 0 || mpfr_cmp_si(log_value.hi(), 700) >= 0) return std::nullopt;
  return exp(log_value).to_string(digits);
}

BoundReport bound_report(const Integer& d, std::optional<int> rho, std::optional<Rational> eps, long precision) {
  if (d < 1) throw DomainError("degree must be at least 1");
  BoundReport r;
  r.d = d;
  r.rho = rho;
  r.eps = eps;
  r.precision = precision;
  r.metadata =
      "n(rho) table read as rho -> n(rho): (2,12) (4,1152) (6,103680) (7,2903040) (8,696729600) "
      "(9,1393459200) (10,8360755200); rho! 2^rho otherwise";
  auto v = voutier(d, precision);
  r.entries.push_back({"voutier", v, v ? "" : "trivial for d < 3"});
  for (int n = 1; n <= 3; ++n)
    r.entries.push_back({"product_bound_" + std::to_string(n), product_bound(n, d, precision), ""});
  r.entries.push_back({"relative_dobrowolski", relative_dobrowolski(d, precision), ""});
  if (rho) {
    G1Value g = g1(*rho, d, precision);
    r.entries.push_back({"g1", g.log_value, "argmin r=" + std::to_string(g.argmin)});
    r.entries.push_back({"g2", g2(*rho, d, precision), ""});
  }
  r.entries.push_back({"main_bound", main_bound(d, precision), ""});
  if (eps) r.entries.push_back({"c_eps", c_eps_log(*eps, precision), ""});
  return r;
}

}  // namespace weilcert
