#pragma once

#include <optional>

#include "flasque/gmodules.hpp"
#include "flasque/klein.hpp"
#include "flasque/report.hpp"

namespace flasque {

/// Fragment of L^× for L = K(√π, √u) in additive notation, over klein_four():
/// generators √π, √u, i with 4·i = 0. σ fixes √π and negates √u, τ fixes √u
/// and negates √π; -1 = 2·i.
FgAbGModule local_fragment();

/// w(e₁, e₂, m) = e₁, the normalized valuation of L (w(√π) = 1).
IntVector valuation_row();
Integer valuation(const ModuleElement& x);

struct LocalTorusPoint {
  ModuleElement t;
  ModuleElement x;
};

/// Checks σt - t = x + τx, τt - t = x + σx and N_G x = 0 in the fragment.
/// Throws NotOnTorus naming the violated equation.
LocalTorusPoint torus_point(const ModuleElement& t, const ModuleElement& x);

/// Σ_g e_g ⊗ g(t) ⊕ Σ_{g≠1} (g-1) ⊗ g(x), expressed in T_* ⊗ fragment
/// coordinates; nullopt when it is not in the image of T_* ⊗ fragment.
std::optional<ModuleElement> tensor_point(const KleinData& k, const ModuleElement& t, const ModuleElement& x);

/// First coordinate t of an element of T_* ⊗ fragment (the identity
/// coefficient of its Z[G] component).
ModuleElement first_coordinate(const KleinData& k, const ModuleElement& z);

/// K^× ⊕ L^× ⊕ L^× -> L^×, (α, β, γ) ↦ α + σβ + τσβ + τγ + στγ, where the
/// first summand is the fixed-point module of the fragment.
ModuleMap rt_image_map();

CheckReport verify_local_counterexample();
CheckReport verify_phi_eq_e_psi();

}  // namespace flasque
