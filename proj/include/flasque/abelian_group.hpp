#pragma once

#include <optional>
#include <string>
#include <utility>

#include "flasque/integer_matrix.hpp"

namespace flasque {

/// Isomorphism class of a finitely generated abelian group:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.
class AbGroupClass {
 public:
  AbGroupClass() = default;

  /// Normalizes an arbitrary list of cyclic orders (units dropped, zero
  /// entries counted as free summands) into invariant-factor form.
  static AbGroupClass from_cyclic_orders(std::size_t free_rank, const IntVector& orders);
  static AbGroupClass trivial() { return {}; }

  std::size_t free_rank() const { return free_rank_; }
  const IntVector& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of a finite group; nullopt when free_rank > 0.
  std::optional<Integer> order() const;
  /// Largest invariant factor (1 for the trivial group); nullopt when infinite.
  std::optional<Integer> exponent() const;
  bool exponent_divides(const Integer& n) const;

  /// Class of the direct sum.
  AbGroupClass operator+(const AbGroupClass& other) const;
  friend bool operator==(const AbGroupClass&, const AbGroupClass&) = default;

  /// "0", "Z", "Z^2 + Z/2", "Z/2 + Z/4": free part first, torsion in divisor order.
  std::string to_string() const;

 private:
  AbGroupClass(std::size_t free_rank, IntVector invariant_factors)
      : free_rank_(free_rank), torsion_(std::move(invariant_factors)) {}

  friend AbGroupClass cokernel_class(const IntMatrix& relations);

  std::size_t free_rank_ = 0;
  IntVector torsion_;
};

/// Z^rows / (column span of relations).
AbGroupClass cokernel_class(const IntMatrix& relations);

/// Quotient of the subgroup with basis `super_basis` (full column rank) by the
/// subgroup generated by the columns of `sub_generators`, which must lie inside.
AbGroupClass quotient_class(const IntMatrix& super_basis, const IntMatrix& sub_generators);

}  // namespace flasque
