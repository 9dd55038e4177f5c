#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3pencil/singular/singular.hpp"

namespace k3pencil {

/// Plane coordinates of the double sextic model.
const std::vector<std::string>& plane_vars();

/// G_i = (x^2+y^2)z - 2xy(x+y) + (s+1-i)(2x-z)(2y-z)z, with s symbolic
/// or specialized.
MPoly branch_cubic(int i, const std::optional<Rat>& s0 = std::nullopt);

struct BranchConfig {
  std::optional<Rat> s_value;  ///< nullopt: generic fiber over Q(s)
  MPoly G0, G1;
  MPoly sextic;  ///< G0 * G1

  static BranchConfig generic();
  static BranchConfig at(const Rat& s0);
  std::string fiber_name() const;
};

struct LiftedLine {
  std::string label;
  MPoly line;       ///< linear form in x, y, z
  MPoly w_formula;  ///< cubic form with w^2 = sextic on the line
};

/// Linear form restricted to one free variable: solved = expr(other two).
struct LineChart {
  std::size_t solved = 2;
  MPoly expr;
};
LineChart solve_line(const MPoly& line);

/// Restriction of a form to a line, as a form in the two free variables.
MPoly restrict_to_line(const MPoly& F, const MPoly& line);

struct EvenContactResult {
  bool even = false;
  /// Restriction of the sextic, dehomogenized in the later free variable.
  MPoly restriction;
  /// Degree lost by dehomogenizing (contact at the point at infinity).
  int degree_drop = 0;
  std::vector<unsigned> exponents;
  /// restriction == unit * certificate^2 when even (binary cubic form).
  FieldElem unit;
  MPoly certificate;
};

/// Throws std::invalid_argument if the line is a component of the sextic.
EvenContactResult even_contact_test(const MPoly& line, const BranchConfig& config);

struct LiftCheck {
  bool pass = false;
  MPoly residual;  ///< (sextic - w^2) restricted to the line
};
LiftCheck verify_component_lift(const LiftedLine& lift, const BranchConfig& config);

/// Order of contact I_P(line, sextic); 0 when P is off the line.
int line_contact(const MPoly& line, const MPoly& sextic, const ProjPoint& P);

/// Intersection point of two distinct lines (cross product of coefficients).
ProjPoint line_meet(const MPoly& a, const MPoly& b);

/**
 * L_a . L_b on the resolved double cover: 0 when the lines meet at an
 * excluded (singular) point, otherwise 1 iff the two w-formulas agree at
 * the same representative of the meeting point.
 */
int lifted_line_intersection(const LiftedLine& a, const LiftedLine& b, const BranchConfig& config,
                             const std::vector<ProjPoint>& excluded);

/// Full matrix of the given lifted lines with -2 on the diagonal.
std::vector<std::vector<int>> lifted_line_matrix(const std::vector<LiftedLine>& lines, const BranchConfig& config,
                                                 const std::vector<ProjPoint>& excluded);

/// The eight lifted lines of the generic fiber, over Q(s)(alpha), alpha^2 = s^2 - s.
std::vector<LiftedLine> generic_lifted_lines();

/**
 * Lifted lines for a fiber.
 *
 * Generic: the eight lines above. s0 with s0^2 - s0 = 2: the same lines
 * specialized, alpha kept symbolic (alpha^2 = 2). s0 = 1: the five lines
 * z=0, 2x, 2y, x, y with w-formulas regenerated from the square-root
 * certificate (sign: positive leading coefficient). Other s0 with
 * s0^2 - s0 a nonzero rational square: specialized with that root.
 */
std::vector<LiftedLine> lifted_lines(const BranchConfig& config);

struct IdentityResidual {
  std::string step;
  bool pass = false;
  std::string residual;
};

/// Exact checks of the birational chain from the symmetric pencil to w^2 = f1*f0.
std::vector<IdentityResidual> chain_model_check();

/// The pencil member u^2v^2w^2 - u^2 - v^2 - w^2 + 2 + s(u^2-1)(v^2-1)(w^2-1).
MPoly pencil_surface();
/// f_i(x,y) = (1 - x^2y^2) + (s-i)(x^2-1)(y^2-1).
MPoly quartic_f(int i);
/// Homogenization F_i(x,y,z) of f_i.
MPoly quartic_F(int i);

struct CremonaCheck {
  bool pass = false;
  int i = 0;
  MPoly pullback;                ///< F_i(gamma), degree 8
  std::vector<int> exceptional;  ///< multiplicities of z, x-z, y-z
  MPoly residual_cubic;
  FieldElem factor;              ///< residual_cubic = factor * G_i
  std::vector<int> base_multiplicities;  ///< of F_i at (1:0:0), (0:1:0), (1:1:1)
  bool involution = false;       ///< gamma(gamma(p)) proportional to p
  std::string details;
};

/// gamma = T o sigma o T^{-1}, T(x,y,z) = (x+z, y+z, z), sigma = (yz : xz : xy).
std::vector<MPoly> cremona_map();
CremonaCheck cremona_pullback_check(int i);

/// Multiplicity of a plane curve at a point (lowest degree after translation).
int point_multiplicity(const MPoly& F, const ProjPoint& P);

}  // namespace k3pencil
