#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flasque/gmodules.hpp"
#include "flasque/klein.hpp"
#include "flasque/report.hpp"

namespace flasque {

/// A place v of K together with the data of the places of L above it: the
/// decomposition group D of a chosen w | v, the residue degree f_w = [F_w : F],
/// the ramification index e and the local group at w as a D-module. The
/// places above v are the cosets G/D and their local groups are Ind_D^G.
struct LocalPlace {
  std::string name;
  Subgroup decomposition;
  std::size_t residue_degree = 1;
  std::size_t ramification = 1;
  /// Over subgroup_as_group(decomposition); nullopt means a valuation-only Z.
  std::optional<FgAbGModule> local;
  /// w on the local generators.
  IntVector valuation;
};

/// Finitely supported idele fragment I_L over a declared set of places.
/// Residue degrees must be multiples of constant_field_degree.
class PlaceSystem {
 public:
  /// Throws InvalidResidueDegree or InvalidPlace.
  PlaceSystem(GroupPtr group, std::vector<LocalPlace> places, std::size_t constant_field_degree = 1);

  const GroupPtr& group() const { return group_; }
  const std::vector<LocalPlace>& places() const { return places_; }
  const FgAbGModule& ideles() const { return ideles_; }

  /// Names of the places of L, "v" when D = G and "v·g" for the coset gD otherwise.
  const std::vector<std::string>& l_places() const { return l_places_; }
  /// First generator of the block of the given K-place.
  std::size_t offset(std::size_t place) const { return offsets_.at(place); }
  /// Row of deg_{L,F}: f_w · w on every block.
  const IntVector& degree_row() const { return degree_row_; }
  /// One row per place of L: w on that block, zero elsewhere.
  const IntMatrix& valuation_matrix() const { return valuations_; }

  /// Idele fragment from local components keyed by place of L; throws InvalidPlace.
  ModuleElement idele(const std::map<std::string, ModuleElement>& components) const;

 private:
  GroupPtr group_;
  std::vector<LocalPlace> places_;
  std::vector<std::size_t> offsets_;
  std::vector<std::string> l_places_;
  FgAbGModule ideles_;
  IntVector degree_row_;
  IntMatrix valuations_;
};

/// Ind_D^G(A) with the block of coset j at index j * n_gens(A).
FgAbGModule induced_module(const GroupPtr& g, const Subgroup& d, const FgAbGModule& a);

/// Σ f_w · w(ξ_w).
Integer deg_L_F(const PlaceSystem& s, const ModuleElement& xi);
/// deg_{K,F} on I_K = I_L^G, read off the first place above each v; throws NotFixed.
Integer deg_K_F(const PlaceSystem& s, const ModuleElement& alpha);

/// id ⊗ deg_{L,F} on (M ⊗ I_L)^G, landing in M^G. Throws NotFixed.
IntVector deg_T(const PlaceSystem& s, const GLattice& m, const ModuleElement& xi);
/// Same, with tensor_lattice_module(m, s.ideles()) already built.
IntVector deg_T(const PlaceSystem& s, const GLattice& m, const FgAbGModule& tensor, const ModuleElement& xi);

struct PairingInclusion {
  /// Rows: basis of M^G; columns: basis of (M°)^G; entry = evaluation pairing.
  IntMatrix map;
  AbGroupClass cokernel;
};

/// (M°)^G -> (M^G)°; throws InternalDisagreement unless injective with finite cokernel.
PairingInclusion lemma_3_1(const GLattice& m);

/// K = F(λ), L = F'(√λ): λ = 0 and λ = ∞ carry the local fragment, v1 has
/// D = <σ>, v2 splits. The enlarged list adds v3 (D = <στ>, f = 6) and v4 (D = <τ>, f = 8).
std::vector<LocalPlace> prop_6_1_place_list(bool enlarged = false);
PlaceSystem prop_6_1_preset(bool enlarged = false);

CheckReport verify_lemma_3_1();
CheckReport verify_lemma_3_2(const PlaceSystem& s);
CheckReport verify_prop_6_1();
/// All of the above plus the degree-map invariants.
CheckReport verify_global();

}  // namespace flasque
