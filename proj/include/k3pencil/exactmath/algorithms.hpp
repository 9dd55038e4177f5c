#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3pencil/exactmath/fpoly.hpp"
#include "k3pencil/exactmath/mpoly.hpp"

namespace k3pencil {

/// Index of the only variable occurring in p, or nullopt for constants.
/// Throws std::invalid_argument when two or more variables occur.
std::optional<std::size_t> univariate_var(const MPoly& p);

/// Monic gcd of two univariate polynomials; throws "undefined gcd" if both are zero.
MPoly gcd_poly(const MPoly& p, const MPoly& q);

struct SquarefreeFactor {
  MPoly factor;
  unsigned exponent = 0;
};

struct SquarefreeDecomposition {
  FieldElem unit;
  /// Monic, squarefree, pairwise coprime; exponents strictly increasing.
  std::vector<SquarefreeFactor> factors;

  MPoly expand(const std::vector<std::string>& vars) const;
};

/// Yun's algorithm on a nonzero univariate polynomial.
SquarefreeDecomposition squarefree_decomposition(const MPoly& p);
std::vector<std::pair<FPoly, unsigned>> squarefree_factors(const FPoly& p);
/// Product of the distinct monic irreducible-free factors: p / gcd(p, p').
FPoly squarefree_part(const FPoly& p);

/// Sylvester resultant in `var`, determinant by fraction-free Bareiss elimination.
/// Throws std::invalid_argument when either input has degree 0 in var.
MPoly resultant(const MPoly& p, const MPoly& q, std::string_view var);

/// Resultant of two bivariate polynomials (var, other): evaluates `other`
/// at enough rational points and interpolates. Agrees with resultant().
MPoly resultant_by_interpolation(const MPoly& p, const MPoly& q, std::string_view var);

using Bindings = std::map<std::string, PolyFraction, std::less<>>;

/**
 * Substitute rational functions for variables.
 *
 * Every binding must live in one common target ring; unbound variables of p
 * are kept (and must exist in the target ring). Returns num/den with den the
 * product of binding denominators raised to the degrees of p.
 */
PolyFraction substitute(const MPoly& p, const Bindings& bindings);

/// Coefficientwise specialize(); see field.hpp for the alpha rules.
MPoly specialize(const MPoly& p, const Rat& s0, const std::optional<Rat>& alpha0 = std::nullopt);

/// Homogenize a polynomial by adding variable `h` (appended to the list).
MPoly homogenize(const MPoly& p, const std::string& h);

}  // namespace k3pencil
