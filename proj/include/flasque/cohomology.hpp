#pragma once

#include <optional>

#include "flasque/abelian_group.hpp"
#include "flasque/groups.hpp"
#include "flasque/lattices.hpp"

namespace flasque {

/// M^H / N_H M.
AbGroupClass tate_h0(const Subgroup& h, const GLattice& m);

/// Z^1 / B^1 with cocycles indexed by all ordered pairs of H.
AbGroupClass h1(const Subgroup& h, const GLattice& m);

/// ker(N_H) / I_H M.
AbGroupClass tate_h_minus1(const Subgroup& h, const GLattice& m);

/// Degree -1, 0 or 1; anything else throws DimensionMismatch.
AbGroupClass tate_cohomology(const Subgroup& h, const GLattice& m, int degree);

struct CohomologyWitness {
  Subgroup subgroup;
  AbGroupClass group;
};

struct PredicateResult {
  bool holds = true;
  std::optional<CohomologyWitness> witness;

  explicit operator bool() const { return holds; }
};

/// H^1(H, M) = 0 for every subgroup H. Subgroups are scanned from the largest
/// down, so the witness is a maximal offending subgroup.
PredicateResult is_coflasque(const GLattice& m);

/// Ĥ^{-1}(H, M) = 0 for every H, cross-checked against is_coflasque(dual(M)).
/// Throws InternalDisagreement when the two disagree.
PredicateResult is_flasque(const GLattice& m);

}  // namespace flasque
