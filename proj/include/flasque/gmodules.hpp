#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flasque/abelian_group.hpp"
#include "flasque/groups.hpp"
#include "flasque/lattices.hpp"
#include "flasque/normal_form.hpp"

namespace flasque {

/// Elements are coordinate vectors in the generators; two vectors denote the
/// same element when their difference lies in the relation span.
using ModuleElement = IntVector;

/// Finitely generated abelian group Z^n / (column span of relations) with a
/// G-action given on generators. Stability of the relations and the
/// homomorphism property modulo relations are checked at construction.
class FgAbGModule {
 public:
  FgAbGModule(GroupPtr group, std::size_t n_gens, IntMatrix relations, std::vector<IntMatrix> action);

  const GroupPtr& group() const { return group_; }
  std::size_t n_gens() const { return n_gens_; }
  const IntMatrix& relations() const { return relations_; }
  const IntMatrix& action(int g) const { return action_.at(static_cast<std::size_t>(g)); }
  const std::vector<IntMatrix>& actions() const { return action_; }

  bool is_zero(const ModuleElement& x) const;
  bool equal(const ModuleElement& a, const ModuleElement& b) const { return is_zero(a - b); }
  /// Every column of `vectors` is zero in the module.
  bool in_relations(const IntMatrix& vectors) const;
  bool is_fixed(const ModuleElement& x) const;

  /// Isomorphism class as a plain abelian group.
  AbGroupClass abelian_class() const { return cokernel_class(relations_); }

 private:
  GroupPtr group_;
  std::size_t n_gens_;
  IntMatrix relations_;
  std::vector<IntMatrix> action_;
  std::shared_ptr<const LinearSolver> relation_solver_;
};

/// Presented equivariant map; matrix is codomain.n_gens() x domain.n_gens().
class ModuleMap {
 public:
  /// Throws GroupMismatch, DimensionMismatch or NotEquivariant (which also
  /// covers relations not mapping into relations).
  ModuleMap(FgAbGModule domain, FgAbGModule codomain, IntMatrix matrix);

  const FgAbGModule& domain() const { return domain_; }
  const FgAbGModule& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }
  ModuleElement operator()(const ModuleElement& x) const { return matrix_ * x; }

 private:
  FgAbGModule domain_;
  FgAbGModule codomain_;
  IntMatrix matrix_;
};

FgAbGModule from_lattice(const GLattice& m);

/// Generators e_i ⊗ a_j at index i * n_gens(A) + j, relations id ⊗ R,
/// diagonal action.
FgAbGModule tensor_lattice_module(const GLattice& m, const FgAbGModule& a);
/// id_M ⊗ f for a lattice map f: M -> N.
ModuleMap tensor_map(const LatticeMap& f, const FgAbGModule& a);

FgAbGModule direct_sum(const FgAbGModule& a, const FgAbGModule& b);

/// A^H = span(lifts) / span(relations of A), presented as Z^k / relations.
struct FixedPoints {
  IntMatrix lifts;      // n_gens x k, canonical basis of the lifted fixed subgroup
  IntMatrix relations;  // k x r, the relations of A in lift coordinates
  std::size_t rank() const { return lifts.cols(); }
  AbGroupClass abelian_class() const { return cokernel_class(relations); }
};

FixedPoints fixed_points(const FgAbGModule& a);
FixedPoints fixed_points(const FgAbGModule& a, const Subgroup& h);

/// A^G as a module with trivial action, generators the fixed lifts.
FgAbGModule fixed_module(const FgAbGModule& a, const FixedPoints& f);
/// The inclusion A^G -> A, matrix f.lifts.
ModuleMap fixed_inclusion(const FgAbGModule& a, const FixedPoints& f);

/// Some x with f(x) ≡ y, or nullopt when the congruence has no integral
/// solution. A returned x is re-verified.
std::optional<ModuleElement> solve_preimage(const ModuleMap& f, const ModuleElement& y);

}  // namespace flasque
