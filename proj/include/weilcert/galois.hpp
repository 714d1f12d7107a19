#pragma once

// Certificates that Q(alpha)/Q is Galois, torsion orders inside Q(alpha),
// and multiplicative relations among the conjugates of alpha.
//
// Positive answers carry exact certificates. Negative answers (no
// expression found, no relation found) are one-sided: they hold for the
// search bounds and precision used, nothing more.

#include <optional>
#include <vector>

#include "weilcert/field_element.hpp"
#include "weilcert/lll.hpp"
#include "weilcert/polynomial.hpp"
#include "weilcert/roots.hpp"

namespace weilcert {

struct GaloisOptions {
  /// Bound on the integer relation (c_0, ..., c_d) behind a conjugate expression.
  Integer height_bound = 1000000;
  /// Bound on relation exponents.
  int relation_bound = 20;
  /// Working precision of the embeddings, in bits.
  long precision = 256;
  long precision_cap = kDefaultPrecisionCap;
};

/// alpha_index = p(alpha_0), where alpha_0 is the first root in isolate_roots order.
struct ConjugateExpression {
  int index = 0;
  RatPolynomial expression;
  bool certified = false;
};

enum class SearchStatus { Found, None, Indeterminate };

struct ExpressionSearch {
  SearchStatus status = SearchStatus::None;
  std::optional<ConjugateExpression> expression;
  long precision = 0;
};

/// Look for p with deg p < d and alpha_target = p(alpha_base) by lattice
/// reduction on (1, a, ..., a^(d-1), -alpha_target) with a = alpha_base,
/// then verify f(p(x)) = 0 mod f exactly and that p on the base box lands
/// in the target box only. Precision doubles from options.precision until
/// the candidate verifies, no relation bounded by height_bound can exist in
/// the reduced lattice (None), or the cap is hit (Indeterminate).
ExpressionSearch express_conjugate(const IntPolynomial& f, int base, int target, const GaloisOptions& options = {});

struct GaloisResult {
  bool certified = false;
  /// Indexed by root (isolate_roots order); complete when certified.
  std::vector<ConjugateExpression> expressions;
  SearchStatus failure = SearchStatus::Found;
  Integer height_bound;
  long precision = 0;
};

/// CertifiedGalois when every root has a certified expression in the first.
/// Expressions found by lattice search are closed under composition before
/// searching further targets.
GaloisResult is_galois(const IntPolynomial& f, const GaloisOptions& options = {});

/// True iff f(p(x)) = 0 mod f, recomputed exactly.
bool verify_expression(const IntPolynomial& f, const RatPolynomial& p);

/// Smallest n <= 2 d^2 with g^n = 1, testing only n with phi(n) | d (the
/// possible orders of roots of unity in a field of degree d). Empty means g
/// is not a root of unity, assuming the modulus is irreducible.
std::optional<unsigned long> unit_order(const FieldElement& g, int degree);

struct Relation {
  IntVector exponents;
  unsigned long order = 0;  ///< prod alpha_i^(e_i) is a primitive order-th root of unity
};

struct RelationSearch {
  std::vector<Relation> relations;  ///< certified, linearly independent
  /// Rank of the lattice of small archimedean relations found numerically.
  int numeric_rank = 0;
  bool partial = false;
};

/// Candidate exponent vectors |e_i| <= relation_bound from lattice reduction
/// on the log-absolute-value vectors of the conjugates under all embeddings;
/// only candidates whose product is certified torsion are returned.
RelationSearch find_relations(const IntPolynomial& f, const std::vector<ConjugateExpression>& expressions,
                              const GaloisOptions& options = {});

/// True iff prod alpha_i^(e_i) equals a primitive root of unity of the recorded order.
bool verify_relation(const IntPolynomial& f, const std::vector<ConjugateExpression>& expressions, const Relation& r);

struct RankEstimate {
  int num_conjugates = 0;
  std::vector<Relation> relation_basis;
  int rank_upper_certified = 0;
  int rank_heuristic = 0;
  int search_bound = 0;
  bool partial = false;
};

/// Rank of the multiplicative group generated by the conjugates.
/// rank_upper_certified = d - rank(certified relations); rank_heuristic
/// additionally assumes no relations beyond the search bound, and is at
/// least 1 whenever alpha is certified not to be a root of unity.
RankEstimate mult_rank(const IntPolynomial& f, const std::vector<ConjugateExpression>& expressions,
                       const GaloisOptions& options = {});

/// Convenience overload running is_galois first; empty without a Galois certificate.
std::optional<RankEstimate> mult_rank(const IntPolynomial& f, const GaloisOptions& options = {});

/// Rank over Q of a set of integer vectors.
int rank_of(const std::vector<IntVector>& vectors);

}  // namespace weilcert
