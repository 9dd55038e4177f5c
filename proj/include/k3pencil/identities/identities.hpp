#pragma once

#include <string>
#include <vector>

#include "k3pencil/exactmath/algorithms.hpp"

namespace k3pencil {

/// An exact identity lhs == rhs between rational functions.
struct IdentityCheck {
  std::string id;
  PolyFraction lhs, rhs;
  bool pass = false;
  /// lhs.num * rhs.den - rhs.num * lhs.den
  MPoly residual;
  /// Polynomials whose vanishing excludes points from the statement.
  std::vector<std::string> excluded;
  /// Auxiliary facts (spot evaluations and the like), "name: value".
  std::vector<std::string> notes;
  /// Sub-checks that must also hold for pass.
  std::vector<std::pair<std::string, bool>> parts;
};

/// F(x,y,z) = x + 1/x + y + 1/y + z + 1/z over the ring (x, y, z).
PolyFraction laurent_F();
/// G(x,y,z) = 1/(x^2-1) + 1/(y^2-1) + 1/(z^2-1).
PolyFraction sum_G();

IdentityCheck remarkable_identity_check();
IdentityCheck mandelstam_surface_check();
IdentityCheck q_surface_check();
IdentityCheck quartic_family_check();
IdentityCheck reciprocal_check();
IdentityCheck symmetry_group_check();

/// All of the above, in a fixed order.
std::vector<IdentityCheck> all_identity_checks();

}  // namespace k3pencil
