#pragma once

#include <vector>

#include "weilcert/polynomial.hpp"
#include "weilcert/real.hpp"

namespace weilcert {

/// A certified root enclosure.
///
/// The disk of radius `radius` around `center` contains exactly one root of
/// the polynomial it was isolated from. The certificate is the inclusion
/// theorem for Weierstrass corrections: all roots lie in the union of the
/// disks D(c_i, d |W_i|), W_i = f(c_i) / (lc(f) prod_{j != i} (c_i - c_j)),
/// and a connected component made of k disks holds exactly k roots, so
/// pairwise disjoint disks hold one root each.
struct ComplexBox {
  ComplexEnclosure center;  ///< point enclosure of the disk centre
  RealEnclosure radius;     ///< upper bound is the certified radius
  RealEnclosure re;
  RealEnclosure im;
  bool real = false;  ///< centre on the real axis: the root is real

  ComplexEnclosure box() const { return {re, im}; }
  double width() const;
};

struct RootOptions {
  long precision = kDefaultPrecision;
  long precision_cap = 8 * kDefaultPrecisionCap;
};

/// Certified, pairwise disjoint enclosures of all roots of a squarefree
/// integer polynomial, each no wider than target_width. Sorted by real part
/// then imaginary part of the centre; the list is closed under complex
/// conjugation. Throws DomainError for constant or non-squarefree input and
/// IndeterminateError when the precision cap is reached.
std::vector<ComplexBox> isolate_roots(const IntPolynomial& f, double target_width, const RootOptions& options = {});

/// Enclosure of log max(1, |z|) for the root z certified inside the box;
/// [0, 0] whenever |z| <= 1 is certain.
RealEnclosure log_plus_abs(const ComplexBox& box);

/// Enclosure of log |z|; requires 0 outside the disk.
RealEnclosure log_abs(const ComplexBox& box);

}  // namespace weilcert
