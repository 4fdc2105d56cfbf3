#include "flasque/abelian_group.hpp"

#include <sstream>

#include "flasque/error.hpp"
#include "flasque/normal_form.hpp"

namespace flasque {

namespace {

IntMatrix diagonal_matrix(const IntVector& entries) {
  IntMatrix diag(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) diag(i, i) = entries[i];
  return diag;
}

}  // namespace

AbGroupClass AbGroupClass::from_cyclic_orders(std::size_t free_rank, const IntVector& orders) {
  AbGroupClass c = cokernel_class(diagonal_matrix(orders));
  c.free_rank_ += free_rank;
  return c;
}

std::optional<Integer> AbGroupClass::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

std::optional<Integer> AbGroupClass::exponent() const {
  if (free_rank_ > 0) return std::nullopt;
  return torsion_.empty() ? Integer(1) : torsion_.back();
}

bool AbGroupClass::exponent_divides(const Integer& n) const {
  auto e = exponent();
  return e && mpz_divisible_p(n.get_mpz_t(), e->get_mpz_t());
}

AbGroupClass AbGroupClass::operator+(const AbGroupClass& other) const {
  IntVector all = torsion_;
  all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
  AbGroupClass out = cokernel_class(diagonal_matrix(all));
  out.free_rank_ = free_rank_ + other.free_rank_;
  return out;
}

std::string AbGroupClass::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

AbGroupClass cokernel_class(const IntMatrix& relations) {
  SmithForm s = smith_form(relations);
  IntVector torsion;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.divisor(i) != 1) torsion.push_back(s.divisor(i));
  return AbGroupClass(relations.rows() - s.rank, std::move(torsion));
}

AbGroupClass quotient_class(const IntMatrix& super_basis, const IntMatrix& sub_generators) {
  if (super_basis.rows() != sub_generators.rows())
    throw Error(Errc::DimensionMismatch, "quotient of subgroups in different ambient lattices");
  if (rank(super_basis) != super_basis.cols())
    throw Error(Errc::DimensionMismatch, "super_basis is not linearly independent");
  auto coords = LinearSolver(super_basis).solve(sub_generators);
  if (!coords) throw Error(Errc::NoSolution, "subgroup generators do not lie in the ambient subgroup");
  return cokernel_class(*coords);
}

}  // namespace flasque
