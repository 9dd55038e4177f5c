#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3pencil/exactmath/algorithms.hpp"

namespace k3pencil {

/// A point of (weighted) projective space with coordinates in the tower.
struct ProjPoint {
  std::vector<FieldElem> coords;
  /// Empty means ordinary projective space.
  std::vector<int> weights;

  ProjPoint() = default;
  ProjPoint(std::vector<FieldElem> c, std::vector<int> w = {});
  static ProjPoint of(std::initializer_list<long> c);

  std::size_t dim() const { return coords.size(); }
  /// Scale so that the last nonzero coordinate is 1 (ordinary space only).
  ProjPoint normalized() const;
  /// Equality up to (weighted) scaling.
  bool same_as(const ProjPoint& o) const;
  std::string to_string() const;
};

struct SingularityReport {
  ProjPoint point;
  int k = 0;  ///< type A_k
  int milnor_number = 0;
  std::string type() const { return "A_" + std::to_string(k); }
};

/// Default bound for the splitting-lemma jet computation, overridable
/// through the K3PENCIL_JET_ORDER environment variable.
int default_jet_order();

struct ClassifyOptions {
  int jet_order = default_jet_order();
};

/**
 * Classify an isolated critical point of type A_k.
 *
 * f is an affine polynomial in 2 or 3 variables and `point` a critical
 * point with critical value 0. Throws std::domain_error("not of type A")
 * for corank >= 2 and std::domain_error("jet order exceeded") when the
 * reduced one-variable germ vanishes to the jet bound.
 */
SingularityReport milnor_ade_classify(const MPoly& f, const std::vector<FieldElem>& point,
                                      const ClassifyOptions& opt = {});

/**
 * Local intersection number of two plane curves at P.
 *
 * F and G are homogeneous in three variables, or affine in two (then P has
 * two coordinates). Throws std::domain_error("infinite intersection
 * multiplicity") when the curves share a component through P.
 */
int intersection_multiplicity(const MPoly& F, const MPoly& G, const ProjPoint& P);

/// A_{2n-1} for contact order n >= 1 (returns k = 2n-1).
int branch_ade_type(int contact);

struct LocusReport {
  bool complete = false;
  std::vector<ProjPoint> confirmed;
  /// Candidates at which some partial derivative does not vanish.
  std::vector<ProjPoint> rejected;
  /// Eliminant factor with no candidate lift (empty on success).
  std::string witness;
  /// Polynomials in s whose roots are excluded from a generic-s verdict.
  std::vector<std::string> degenerate_s;
};

/**
 * Certify that the singular points of the projective hypersurface F = 0
 * are exactly the given candidates.
 *
 * Candidates are confirmed by direct evaluation of all partials.
 * Completeness uses the standard affine charts x_n = 1, then x_n = 0,
 * x_{n-1} = 1, and so on; in each chart the partials are projected to a
 * coordinate axis by resultants and every root of the eliminant must be
 * the coordinate of a candidate, recursively.
 * Throws std::invalid_argument for non-homogeneous input.
 */
LocusReport verify_singular_locus(const MPoly& F, const std::vector<ProjPoint>& candidates);

struct IntersectionCertificate {
  bool complete = false;
  std::vector<int> multiplicities;  ///< per candidate
  int total = 0;
  /// Resultant in the last variable, a binary form in the other two.
  MPoly eliminant;
  /// eliminant / prod(l_P^{I_P}); a nonzero constant on success.
  MPoly cofactor;
  std::string witness;
};

/**
 * Intersection points of two plane curves with a completeness certificate.
 *
 * Projects from (0:0:1) (which must lie on neither curve); the resultant
 * in z is a binary form whose linear factors correspond to intersection
 * points. The candidates are complete when their multiplicities account
 * for the whole form (Bezout: the total is deg F * deg G).
 */
IntersectionCertificate certify_intersections(const MPoly& F, const MPoly& G,
                                              const std::vector<ProjPoint>& candidates);


/**
 * A_k type of a singular point of a projective hypersurface, classified in
 * the affine chart of its last nonzero coordinate.
 */
int classify_projective_point(const MPoly& F, const ProjPoint& P, const ClassifyOptions& opt = {});

/// The quartic z^2(1+xy) = (x+y)(x+y-4xy+x^2y+xy^2) homogenized in (x:y:z:w).
MPoly quartic_q();

/// Expected singular points of quartic_q() with their A_k types.
std::vector<SingularityReport> quartic_q_expected();

struct SingularTable {
  bool pass = false;
  LocusReport locus;
  std::vector<SingularityReport> rows;  ///< computed types at the candidates
  std::string details;
};

/// Completeness plus per-point classification of the quartic's singular locus.
SingularTable quartic_q_table();

}  // namespace k3pencil
