#pragma once

#include <string>
#include <vector>

#include "flasque/cohomology.hpp"
#include "flasque/lattices.hpp"

namespace flasque {

/// Z[G/H] repeated `multiplicity` times.
struct PermutationBlock {
  Subgroup subgroup;
  std::size_t multiplicity = 1;
};

/// ⊕ Z[G/H]^m in block order, each copy in left_cosets(H) order.
GLattice permutation_sum(const GroupPtr& g, const std::vector<PermutationBlock>& blocks);

/// 0 -> F --inj--> P --surj--> target -> 0 with P permutation and F coflasque.
struct CoflasqueResolution {
  GLattice target;
  GLattice P;
  std::vector<PermutationBlock> blocks;
  GLattice F;
  LatticeMap inj;
  LatticeMap surj;
};

/// Builds P from the blocks, takes F = ker(surj) and verifies the result.
/// Throws SurjectivityFailure or CoflasquenessFailure.
CoflasqueResolution resolution_from_surjection(const GLattice& target, std::vector<PermutationBlock> blocks,
                                               const IntMatrix& surj);

/// Re-runs every check on a resolution: exactness at both junctions,
/// surjectivity, coflasqueness of F, rank additivity and H^1(H, P) = 0.
void verify_resolution(const CoflasqueResolution& r);

/// One Z[G/H]^{r_H} block for every subgroup H with r_H = rank M^H > 0; the
/// distinguished coset of copy i goes to the i-th basis vector of M^H.
CoflasqueResolution coflasque_resolution(const GLattice& m);

/// ⊕_i Z[G] -> I_G, e_g in copy i ↦ g(1 - s_i).
CoflasqueResolution augmentation_ideal_resolution(const GroupPtr& g, const std::vector<int>& generators);

/// Pulls back a resolution of N along a surjection f: M -> N. The fibre
/// product is split as ker(f) ⊕ P using an equivariant lift of surj through
/// f, so ker(f) must carry a permutation basis. Throws NotSurjective,
/// KernelNotPermutation or NoSolution.
CoflasqueResolution pullback_resolution(const CoflasqueResolution& res, const LatticeMap& f);

struct ComparisonEntry {
  std::string condition;
  std::string left;
  std::string right;
  bool passed = false;
};

/// Necessary conditions for F1 ⊕ P2 ≅ F2 ⊕ P1; no isomorphism is searched for.
struct ComparisonReport {
  std::vector<ComparisonEntry> entries;
  bool passed() const;
};

/// Throws TargetMismatch when the resolutions have different targets.
ComparisonReport compare_resolutions(const CoflasqueResolution& r1, const CoflasqueResolution& r2);

}  // namespace flasque
