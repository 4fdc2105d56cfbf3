#pragma once

#include <vector>

#include "flasque/abelian_group.hpp"
#include "flasque/groups.hpp"
#include "flasque/integer_matrix.hpp"

namespace flasque {

/// Free Z-module of finite rank with a G-action by invertible integer matrices
/// acting on column vectors. The homomorphism property and unimodularity are
/// checked exhaustively at construction.
class GLattice {
 public:
  GLattice(GroupPtr group, std::vector<IntMatrix> action);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& action(int g) const { return action_.at(static_cast<std::size_t>(g)); }
  const std::vector<IntMatrix>& actions() const { return action_; }

  friend bool operator==(const GLattice& a, const GLattice& b) {
    return same_group(a.group_, b.group_) && a.rank_ == b.rank_ && a.action_ == b.action_;
  }

 private:
  GroupPtr group_;
  std::size_t rank_;
  std::vector<IntMatrix> action_;
};

/// Equivariant homomorphism; matrix is codomain.rank() x domain.rank().
class LatticeMap {
 public:
  /// Throws GroupMismatch, DimensionMismatch or NotEquivariant.
  LatticeMap(GLattice domain, GLattice codomain, IntMatrix matrix);

  const GLattice& domain() const { return domain_; }
  const GLattice& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector operator()(const IntVector& x) const { return matrix_ * x; }

 private:
  GLattice domain_;
  GLattice codomain_;
  IntMatrix matrix_;
};

/// f∘g
LatticeMap compose(const LatticeMap& f, const LatticeMap& g);
LatticeMap identity_map(const GLattice& m);
LatticeMap zero_map(const GLattice& domain, const GLattice& codomain);

struct Sublattice {
  GLattice lattice;
  LatticeMap inclusion;
};

GLattice trivial_lattice(const GroupPtr& g, std::size_t rank);

/// Left cosets xH ordered by their smallest member index.
std::vector<std::vector<int>> left_cosets(const Subgroup& h);
/// Position of the coset containing x in left_cosets(h).
std::size_t coset_index(const std::vector<std::vector<int>>& cosets, int x);

/// Z[G/H] with G permuting the cosets by left multiplication.
GLattice permutation_lattice(const GroupPtr& g, const Subgroup& h);
/// Z[G], basis ordered as the group elements.
GLattice group_ring(const GroupPtr& g);

/// ε: Z[G] -> Z, every group element to 1.
LatticeMap augmentation(const GroupPtr& g);
/// I_G with basis {g - 1 : g != 1} in element order, and its inclusion in Z[G].
Sublattice augmentation_kernel(const GroupPtr& g);

GLattice direct_sum(const GLattice& m, const GLattice& n);
/// Kronecker-product action; e_i ⊗ f_j at index i * rank(n) + j.
GLattice tensor(const GLattice& m, const GLattice& n);
/// Hom(M, Z) with g acting as transpose(action(g^-1)).
GLattice dual(const GLattice& m);
/// Same matrices, viewed over the subgroup as a group in its own right.
GLattice restrict(const GLattice& m, const Subgroup& h);

/// Action on a G-stable sublattice given by a basis (columns). Throws NotStable.
GLattice sublattice_action(const GLattice& m, const IntMatrix& basis);

struct FixedSublattice {
  IntMatrix basis;  // canonical (column HNF), saturated
  std::size_t rank = 0;
};

FixedSublattice fixed_sublattice(const GLattice& m, const Subgroup& h);

/// Kernel with canonical basis; f∘inclusion = 0.
Sublattice kernel_lattice(const LatticeMap& f);

/// Σ_{h ∈ H} action(h); the whole group when h is omitted.
IntMatrix norm_operator(const GLattice& m);
IntMatrix norm_operator(const GLattice& m, const Subgroup& h);

bool is_injective(const LatticeMap& f);
bool is_surjective(const LatticeMap& f);

/// True iff image(f) == kernel(g) as subgroups of the middle lattice.
/// Throws CompositionMismatch if g∘f != 0 and DimensionMismatch when the
/// middle lattices differ.
bool exactness_check(const LatticeMap& f, const LatticeMap& g);

/// ker(g) / im(f); requires g∘f = 0.
AbGroupClass homology_at_middle(const LatticeMap& f, const LatticeMap& g);

}  // namespace flasque
