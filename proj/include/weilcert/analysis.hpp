#pragma once

// End-to-end analysis of one minimal polynomial: irreducibility, torsion,
// height, Galois certificate, rank estimate and the comparison with the
// main lower bound.

#include <optional>
#include <string>
#include <vector>

#include "weilcert/galois.hpp"
#include "weilcert/height.hpp"
#include "weilcert/polynomial.hpp"
#include "weilcert/real.hpp"

namespace weilcert {

/// Degree sieve first, then recognition of f as a cyclotomic polynomial
/// Phi_n; when both are inconclusive, look for a factor x, a
/// repeated factor, or a linear or quadratic factor read off the numeric
/// roots and confirmed by exact division. Higher-degree factors go unnoticed
/// and leave the status at Assumed.
Irreducibility irreducibility(const IntPolynomial& f);

enum class GaloisStatus { Certified, NoWitness, Indeterminate, Skipped };

const char* to_string(GaloisStatus s);

struct AnalysisOptions {
  HeightOptions height;
  GaloisOptions galois;
};

struct Analysis {
  IntPolynomial poly;  ///< primitive, positive leading coefficient
  int degree = 0;
  Irreducibility irreducibility = Irreducibility::Assumed;
  std::optional<unsigned long> root_of_unity_order;
  std::optional<HeightResult> height;
  GaloisStatus galois = GaloisStatus::Skipped;
  std::optional<GaloisResult> galois_detail;
  std::optional<RankEstimate> rank;
  std::optional<RealEnclosure> log_main_bound;
  /// log10(h) - log10(main_bound(d)); set when the theorem applies
  /// (certified Galois, not a root of unity).
  std::optional<RealEnclosure> margin_log10;
  /// "ok", "not-irreducible", "indeterminate" or "error".
  std::string status = "ok";
  std::vector<std::string> notes;
};

/// Never throws for nonzero nonconstant input; failures land in status and notes.
/// Throws DomainError for zero or constant f.
Analysis analyze(const IntPolynomial& f, const AnalysisOptions& options = {});

}  // namespace weilcert
