#pragma once

#include "flasque/lattices.hpp"
#include "flasque/report.hpp"
#include "flasque/resolutions.hpp"

namespace flasque {

/// Element indices of klein_four().
namespace klein {
inline constexpr int kOne = 0;
inline constexpr int kSigma = 1;
inline constexpr int kTau = 2;
inline constexpr int kSigmaTau = 3;
}  // namespace klein

/// T_* = ker(Z[G] ⊕ I_G -> Z[G] ⊕ Z[G]), (t, x) ↦ (σt - t - x - τx, τt - t - x - σx),
/// with Z[G] ordered (1, σ, τ, στ) and I_G ordered (σ-1, τ-1, στ-1).
struct KleinData {
  GroupPtr G;
  GLattice ZG;
  GLattice IG;
  LatticeMap ig_inclusion;
  GLattice ambient;         // Z[G] ⊕ I_G
  LatticeMap defining_map;  // ambient -> Z[G] ⊕ Z[G]
  GLattice Tstar;
  LatticeMap embed;         // T_* -> ambient
  IntVector norm_point;     // (N_G, 0) in T_* coordinates
  LatticeMap z_to_tstar;    // 1 ↦ (N_G, 0)
  LatticeMap tstar_to_ig;   // second projection
};

KleinData build_T_star();

/// Product in Z[G] of two vectors in the element basis, by the group table.
IntVector group_ring_product(const FiniteGroup& g, const IntVector& a, const IntVector& b);

/// Coordinates of an ambient vector (t, x) in T_*; throws LiftNotLanding.
IntVector tstar_coordinates(const KleinData& k, const IntVector& ambient_vector);

CheckReport verify_lemma_4_1();
CheckReport verify_long_exact_sequence();

/// φ: Z[G] ⊕ Z[G] -> I_G, (a, b) ↦ a(1-σ) + b(1-τ).
CoflasqueResolution phi_resolution(const KleinData& k);

/// The lift Z[G] ⊕ Z[G] -> T_* with (1,0) ↦ (σ+στ, 1-σ), (0,1) ↦ (τ+στ, 1-τ),
/// as a 4 x 8 matrix in T_* coordinates.
IntMatrix paper_lift(const KleinData& k);

/// 0 -> F_* -> Z ⊕ Z[G] ⊕ Z[G] -> T_* -> 0 with Z ↦ (N_G, 0) and the lift above.
CoflasqueResolution build_paper_resolution(const KleinData& k);
CoflasqueResolution build_paper_resolution();

CheckReport verify_paper_resolution();
CheckReport verify_lift_ambiguity(long n, long m);

/// Every check of this module, including lift ambiguity for n, m in [-2, 2].
CheckReport verify_klein();

namespace detail {
/// Injectivity and exactness checks against an arbitrary (possibly corrupted) embedding matrix.
CheckReport verify_lemma_4_1(const KleinData& k, const IntMatrix& embed_matrix);
}  // namespace detail

}  // namespace flasque
