#pragma once

// Explicit height lower bounds and the inequality chain behind the main
// estimate, evaluated on log-scale certified enclosures.
//
// Every value function returns an enclosure of the natural logarithm of the
// quantity: g1 and c(eps) leave double range long before the grids of
// interest end.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilcert/polynomial.hpp"
#include "weilcert/real.hpp"

namespace weilcert {

/// Largest order of a finite subgroup of GL_rho(Z): rho! 2^rho for
/// rho in {1, 3, 5} and rho > 10, tabulated for the remaining small ranks.
Integer n_rho(int rho);

/// log of (1/(4d)) (log log d / log d)^3; empty ("trivial") for d < 3.
std::optional<RealEnclosure> voutier(const Integer& d, long precision = kDefaultPrecision);

/// log of D^-1 (1050 n^5 log(3D))^(-n^2 (n+1)^2), the lower bound for a
/// product of heights of n multiplicatively independent numbers in a field
/// of degree D.
RealEnclosure product_bound(int n, const Integer& D, long precision = kDefaultPrecision);

/// log of D^-1 (log log 5D)^3 / (log 2D)^4 (relative Dobrowolski bound).
RealEnclosure relative_dobrowolski(const RealEnclosure& D);
RealEnclosure relative_dobrowolski(const Integer& D, long precision = kDefaultPrecision);

struct G1Value {
  RealEnclosure log_value;
  int argmin = 1;  ///< the r attaining the minimum
};

/// log of min over 1 <= r <= rho of d^(1/r) (1050 r^5 log 3d)^(r (r+1)^2).
G1Value g1(int rho, const Integer& d, long precision = kDefaultPrecision);

/// log of 6.5e7 rho^(rho+5) (log log 6d^2)^5.
RealEnclosure g2(int rho, const Integer& d, long precision = kDefaultPrecision);

/// log of 1e-8 exp(-(49/2) log(3d)^(3/4) log log 3d).
RealEnclosure main_bound(const Integer& d, long precision = kDefaultPrecision);

/// log c(eps) = log 1e-8 + eps log(1/3) - 181 (724/(5 eps))^4 - (724/(5 eps))^5.
RealEnclosure c_eps_log(const Rational& eps, long precision = kDefaultPrecision);

enum class Verdict { Holds, Fails, Indeterminate };

const char* to_string(Verdict v);

struct ParameterPoint {
  std::optional<Integer> n;
  std::optional<Integer> d;
  std::optional<int> rho;
  std::optional<Rational> eps;

  std::string to_string() const;
};

/// Outcome of one inequality LHS <= RHS. Holds / Fails only on disjoint
/// enclosures or exact integer comparison.
struct ChainVerdict {
  std::string id;
  ParameterPoint point;
  Verdict verdict = Verdict::Indeterminate;
  /// log(RHS) - log(LHS)
  RealEnclosure margin;
  RealEnclosure log_lhs;
  RealEnclosure log_rhs;
  /// Exact equality established (only for exact comparisons).
  bool equality = false;
};

struct PrecisionPolicy {
  long precision = kDefaultPrecision;
  long precision_cap = kDefaultPrecisionCap;
};

/// Euler's totient bounds: n/phi(n) <= log log 3n / log log 3 (id "totient-ratio")
/// and phi(n) >= sqrt(n/2), checked exactly as 2 phi(n)^2 >= n (id "totient-sqrt").
struct TotientVerdicts {
  ChainVerdict ratio;
  ChainVerdict sqrt_form;
};
TotientVerdicts totient_lemma_check(std::uint64_t n, const PrecisionPolicy& policy = {});
/// Same check with phi(n) supplied by the caller (range scans use a sieve).
TotientVerdicts totient_lemma_check(std::uint64_t n, std::uint64_t phi, const PrecisionPolicy& policy = {});

/// n!/n^n <= sqrt(2 pi n) e^(1/(12n)) e^(-n), LHS exact.
ChainVerdict stirling_check(unsigned n, const PrecisionPolicy& policy = {});
ChainVerdict stirling_check(unsigned n, const Integer& factorial, const PrecisionPolicy& policy = {});

/// One entry of the proof-chain audit. Step ids:
///   a  718 sqrt(2 pi rho) e^(1/(12 rho)) (2/e)^rho <= 1440
///   b  n(rho) <= 135 rho! 2^(rho-1)
///   c  X log(2X)^4 <= g2(rho, d), X = 1440 rho^rho log log 6d^2
///   d  g2(rho, d) <= 6.5e7 exp(3.5 log(3d)^(1/4) log log 3d), when rho <= log(3d)^(1/4)
///   e  g1(rho, d) <= 31693 exp(log(3d)^(3/4) + 13.5 log(3d)^(3/4) log log 3d), when rho >= log(3d)^(1/4)
///   f  min(g1, g2) <= 6.5e7 exp(24.5 log(3d)^(3/4) log log 3d)
///   g  log c(eps) - eps log d <= log main_bound(d)
struct ChainOptions {
  PrecisionPolicy policy;
  std::string steps = "abcdefg";
  unsigned jobs = 1;
};

struct GridPoint {
  Integer d;
  int rho = 1;
  std::optional<Rational> eps;
};

/// Verdicts for every requested step at every point, in point order then
/// step order. Conditional steps d and e are omitted where their hypothesis
/// on rho does not hold; g needs eps.
std::vector<ChainVerdict> verify_chain(const std::vector<GridPoint>& points, const ChainOptions& options = {});

/// Inequality (b) at one rank, exact.
ChainVerdict nrho_check(int rho);
/// Inequality (a) at one rank.
ChainVerdict constant_step_check(int rho, const PrecisionPolicy& policy = {});

/// True for a failure of step e with log(3d) < 16, the range where the
/// estimate (t+1)(t+2)^2 <= 6 t^3, t = log(3d)^(1/4), behind that step is false.
bool expected_failure(const ChainVerdict& v);

/// `count` log-spaced degrees covering [1, 10^max_exponent], floor-rounded and
/// deduplicated, plus every d <= 10.
std::vector<Integer> default_degree_grid(int count = 400, int max_exponent = 300);

/// Every (d, rho) with 1 <= rho <= min(d, rho_max) over the degrees.
std::vector<GridPoint> rank_grid(const std::vector<Integer>& degrees, int rho_max = 200);

/// Tallies of one verification suite. Failures and indeterminate verdicts
/// are kept in full; holds are only counted.
struct SuiteSummary {
  std::string suite;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t expected_fails = 0;
  std::size_t indeterminate = 0;
  std::vector<ChainVerdict> failures;
  std::vector<ChainVerdict> expected;
  std::vector<ChainVerdict> equalities;

  std::size_t total() const { return holds + fails + expected_fails + indeterminate; }
  bool passed() const { return fails == 0 && indeterminate == 0; }
  void add(ChainVerdict v);
  void merge(SuiteSummary other);
};

SuiteSummary verify_totient_range(std::uint64_t max_n, const PrecisionPolicy& policy = {});
SuiteSummary verify_stirling_range(unsigned max_n, const PrecisionPolicy& policy = {});
SuiteSummary verify_nrho_range(int max_rho);
SuiteSummary verify_constant_step_range(int max_rho, const PrecisionPolicy& policy = {});
/// Chain audit tallied per step id ("chain-a" ... "chain-g").
std::vector<SuiteSummary> verify_chain_summary(const std::vector<GridPoint>& points, const ChainOptions& options = {});

struct BoundEntry {
  std::string name;
  std::optional<RealEnclosure> log_value;  ///< empty: trivial
  std::string note;
};

struct BoundReport {
  Integer d;
  std::optional<int> rho;
  std::optional<Rational> eps;
  long precision = kDefaultPrecision;
  std::vector<BoundEntry> entries;
  std::string metadata;
};

BoundReport bound_report(const Integer& d, std::optional<int> rho, std::optional<Rational> eps,
                         long precision = kDefaultPrecision);

/// Decimal rendering of exp(log_value) when |log_value| < 700, else empty.
std::optional<std::string> decimal_value(const RealEnclosure& log_value, int digits = 6);

}  // namespace weilcert
