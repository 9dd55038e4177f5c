#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3pencil/exactmath/algorithms.hpp"

namespace k3pencil {

/// Outcome of certifying the common zero set of a polynomial system.
struct ZeroSetCertificate {
  bool ok = false;
  /// Human-readable reason on failure (a polynomial factor, typically).
  std::string witness;
  /// Nonconstant factors of univariate eliminants over Q(s) that are
  /// constant in the affine variables (generic-s degeneracies).
  std::vector<std::string> degenerate_s;
};

/**
 * Univariate eliminant in the first variable of the ring.
 *
 * The result vanishes at the first coordinate of every common zero of
 * `eqs` (over an algebraic closure). Variables are removed from last to
 * first by resultants of pseudo-random linear combinations (fixed seed);
 * several independent projections are intersected by gcd to drop
 * spurious roots. Returns the zero polynomial when the projection is the
 * whole line.
 */
FPoly project_to_first(const std::vector<MPoly>& eqs, std::uint64_t seed = 1);

/**
 * Certify that every common zero of `eqs` is one of `candidates`.
 *
 * Candidates are coordinate vectors in the ring's variable order. Each
 * candidate must already be known to be a zero; this only proves there
 * are no others.
 */
ZeroSetCertificate certify_zero_set(const std::vector<MPoly>& eqs,
                                    const std::vector<std::vector<FieldElem>>& candidates);

}  // namespace k3pencil
