#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3pencil/lattice/intmatrix.hpp"

namespace k3pencil {

/// Integral lattice given by generators and their Gram matrix.
struct GramLattice {
  std::vector<std::string> labels;
  IntMatrix gram;

  GramLattice() = default;
  explicit GramLattice(IntMatrix g, std::vector<std::string> names = {});
  std::size_t dim() const { return gram.rows(); }
  bool is_even() const;
};

struct Signature {
  std::size_t rank = 0, n_plus = 0, n_minus = 0, n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Discriminant group A = (+) Z/d_i with its finite quadratic form.
struct DiscriminantForm {
  std::vector<BigInt> orders;        ///< invariant factors > 1
  std::vector<Rat> q;                ///< q(g_i) in [0, 2)
  std::vector<std::vector<Rat>> b;   ///< b(g_i, g_j) in [0, 1)

  std::size_t group_order() const;
  /// q of sum k_i g_i, reduced to [0, 2).
  Rat q_of(const std::vector<long>& k) const;
  /// b of two elements, reduced to [0, 1).
  Rat b_of(const std::vector<long>& k, const std::vector<long>& l) const;
  /// Same group with q negated.
  DiscriminantForm negated() const;
};

struct LatticeInvariants {
  Signature signature;
  DiscriminantForm form;
  BigInt abs_det;  ///< of the nondegenerate quotient
  std::vector<BigInt> invariant_factors() const { return form.orders; }
  std::string summary() const;
};

/// Parses e.g. "U + E8(-1)^2 + <-12>", also accepting ⊕, ⟨⟩, − and ².
GramLattice standard_lattice(std::string_view spec);

/// Rational congruence diagonalization.
Signature rank_signature(const GramLattice& L);

/// Free quotient by the radical; nondegenerate of the same rank.
GramLattice radical_quotient(const GramLattice& L);

/// Throws std::domain_error("call radical_quotient first") on degenerate input.
LatticeInvariants discriminant_group_form(const GramLattice& L);

/// Invariants of radical_quotient(L).
LatticeInvariants lattice_invariants(const GramLattice& L);

/// Group isomorphism carrying q and b of A onto those of B (brute force).
bool forms_isomorphic(const DiscriminantForm& A, const DiscriminantForm& B);

/// Equal rank, signature, invariant factors and isomorphic discriminant forms.
bool fingerprints_match(const LatticeInvariants& a, const LatticeInvariants& b);
bool invariants_match(const GramLattice& A, const GramLattice& B);

/**
 * Expected fingerprint of the orthogonal complement in the K3 lattice
 * (rank 22, signature (3,19)): rank 22 - rho, signature (3 - n+, 19 - n-),
 * same group, q negated.
 */
LatticeInvariants complement_in_k3(const LatticeInvariants& picard);

/// gram -> U^T gram U for a unimodular U.
GramLattice conjugate(const GramLattice& L, const IntMatrix& U);

}  // namespace k3pencil
