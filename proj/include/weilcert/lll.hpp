#pragma once

#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/polynomial.hpp"

namespace weilcert {

using IntVector = std::vector<Integer>;

/// Lattice basis given by its rows.
struct LatticeBasis {
  std::vector<IntVector> rows;
};

/// LLL reduction with exact integer Gram-Schmidt data (the integral variant
/// that carries the Gram determinants d_i and the scaled coefficients
/// lambda_{ij} = d_j mu_{ij}). delta must lie in (1/4, 1). Throws DomainError
/// on linearly dependent rows or ragged input.
LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta = Rational(99, 100));

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace weilcert
