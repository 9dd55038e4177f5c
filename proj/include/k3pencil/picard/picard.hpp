#pragma once

#include <string>
#include <vector>

#include "k3pencil/cover/cover.hpp"
#include "k3pencil/lattice/lattice.hpp"

namespace k3pencil {

/// One row of a fiber's singularity table: an A_k point of the sextic.
struct SingularEntry {
  ProjPoint point;
  int k = 1;
};

/// Everything needed to assemble the divisor lattice of one fiber.
struct FiberData {
  std::string id;  ///< "generic", "s1", "s-1"
  BranchConfig config;
  std::vector<SingularEntry> singular;
  std::vector<LiftedLine> lines;
};

/// Fiber ids accepted by fiber_data: "generic", "s1", "s-1".
FiberData fiber_data(const std::string& id);

struct SingularTableCheck {
  bool pass = false;
  std::string details;
  std::vector<int> computed_k;
};

/**
 * Recompute the singularity table of a fiber.
 *
 * Generic: the points are B0 ∩ B1 (completeness by certify_intersections)
 * and the type is A_{2n-1} for intersection multiplicity n. Special
 * fibers: verify_singular_locus on the sextic. In both cases every point
 * is also classified directly.
 */
SingularTableCheck check_singular_table(const FiberData& fiber);

/// A line meeting one of two extremal divisors E_{i,+l} / E_{i,-l}.
struct AmbiguousSlot {
  std::size_t line = 0;   ///< row of L in the Gram matrix
  std::size_t plus = 0;   ///< row of E_{i,l}
  std::size_t minus = 0;  ///< row of E_{i,-l}
  std::size_t point = 0;  ///< index into the singular table
};

struct DivisorConfig {
  std::string fiber;
  std::vector<std::string> labels;
  IntMatrix fixed;  ///< all entries except the ambiguous slots (left 0)
  std::vector<AmbiguousSlot> slots;
  /// First row and length of the exceptional chain above each point.
  std::vector<std::pair<std::size_t, std::size_t>> chains;

  std::size_t index_of(const std::string& label) const;
  /// fixed plus slot choices: bit 0 -> plus, bit 1 -> minus.
  IntMatrix complete(const std::vector<int>& bits) const;
};

/**
 * Labels H, E_{i,j} (j = -(n-1)..n-1 for A_{2n-1}; E_{i,0} for A_1 and
 * the middle of each chain), then the lines.
 *
 * A line with contact c at a point of type A_{2n-1} meets E_{i,0} when
 * c >= 2n and one of E_{i,+-(n - c/2)} otherwise. The first such line at
 * each point (label order) defines the + side; the others are slots.
 * Throws std::runtime_error if the singular table fails verification
 * (when `verify` is set) or a contact is odd.
 */
DivisorConfig build_divisor_config(const FiberData& fiber, bool verify = true);
DivisorConfig build_divisor_config(const std::string& fiber, bool verify = true);

struct Survivor {
  std::vector<int> bits;
  IntMatrix gram;
  std::size_t rank = 0;
};

struct FiberResult {
  std::string fiber;
  std::size_t assignments = 0;
  std::vector<Survivor> survivors;
  LatticeInvariants invariants;
};

/**
 * Try all 2^slots completions, keep those of rank <= rank_bound and
 * compute their invariants. Throws std::runtime_error if two survivors
 * disagree. jobs = 0 uses the hardware concurrency.
 */
FiberResult enumerate_and_filter(const DivisorConfig& config, std::size_t rank_bound = 20, unsigned jobs = 0);

/// Picard and transcendental model lattices for a fiber.
std::string picard_model(const std::string& fiber);
std::string transcendental_model(const std::string& fiber);

LatticeInvariants transcendental_invariants(const FiberResult& result);

/**
 * Relabel E_{i,j} <-> E_{i,-j} above one point: the Gram of the same
 * configuration seen through the other sheet. Returns the permuted Gram.
 */
IntMatrix chain_flip(const DivisorConfig& config, const IntMatrix& gram, std::size_t point);

struct ReflectionCheck {
  bool pass = false;
  Rat s_from, s_to;
  IntMatrix matrix;  ///< projective involution fixing x + y - z = 0 pointwise
  std::vector<int> target;       ///< G_i(s_from) o M is proportional to G_target[i](s_to)
  std::vector<Rat> factors;
  std::string details;
};

/// Harmonic homology with axis x + y - z = 0 carrying the branch cubics at
/// s_from onto those at s_to.
ReflectionCheck reflection_isomorphism_check(const Rat& s_from, const Rat& s_to);

}  // namespace k3pencil
