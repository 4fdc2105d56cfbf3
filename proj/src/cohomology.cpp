#include "flasque/cohomology.hpp"

#include <algorithm>

#include "flasque/error.hpp"
#include "flasque/normal_form.hpp"

namespace flasque {

namespace {

void check_subgroup(const Subgroup& h, const GLattice& m) {
  if (!same_group(h.parent(), m.group())) throw Error(Errc::GroupMismatch, "subgroup of another group");
}

// Every Tate group of a lattice is killed by |H|.
AbGroupClass checked(AbGroupClass c, const Subgroup& h, const char* what) {
  if (!c.exponent_divides(Integer(static_cast<unsigned long>(h.order()))))
    throw Error(Errc::InternalDisagreement,
                std::string(what) + " = " + c.to_string() + " is not killed by |H| for H = " + h.name());
  return c;
}

IntMatrix augmentation_generators(const Subgroup& h, const GLattice& m) {
  std::vector<IntMatrix> blocks;
  const IntMatrix id = IntMatrix::identity(m.rank());
  for (int x : h.members()) blocks.push_back(m.action(x) - id);
  return hstack(blocks, m.rank());
}

}  // namespace

AbGroupClass tate_h0(const Subgroup& h, const GLattice& m) {
  check_subgroup(h, m);
  const auto fixed = fixed_sublattice(m, h);
  return checked(quotient_class(fixed.basis, norm_operator(m, h)), h, "Ĥ^0");
}

AbGroupClass h1(const Subgroup& h, const GLattice& m) {
  check_subgroup(h, m);
  const auto& g = *m.group();
  const auto& members = h.members();
  const std::size_t k = members.size();
  const std::size_t n = m.rank();
  auto pos = [&](int x) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };

  IntMatrix cocycle(k * k * n, k * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b, row += n) {
      const std::size_t ab = pos(g.mul(members[a], members[b]));
      const IntMatrix& act = m.action(members[a]);
      // x_ab - x_a - a.x_b = 0
      for (std::size_t i = 0; i < n; ++i) {
        cocycle(row + i, ab * n + i) += 1;
        cocycle(row + i, a * n + i) -= 1;
        for (std::size_t j = 0; j < n; ++j) cocycle(row + i, b * n + j) -= act(i, j);
      }
    }
  IntMatrix cocycles = kernel_basis(cocycle);

  std::vector<IntMatrix> blocks;
  const IntMatrix id = IntMatrix::identity(n);
  for (int x : members) blocks.push_back(m.action(x) - id);
  IntMatrix coboundaries = vstack(blocks, n);
  return checked(quotient_class(cocycles, coboundaries), h, "H^1");
}

AbGroupClass tate_h_minus1(const Subgroup& h, const GLattice& m) {
  check_subgroup(h, m);
  return checked(quotient_class(kernel_basis(norm_operator(m, h)), augmentation_generators(h, m)), h, "Ĥ^-1");
}

AbGroupClass tate_cohomology(const Subgroup& h, const GLattice& m, int degree) {
  switch (degree) {
    case -1: return tate_h_minus1(h, m);
    case 0: return tate_h0(h, m);
    case 1: return h1(h, m);
    default: throw Error(Errc::DimensionMismatch, "degree must be -1, 0 or 1");
  }
}

namespace {

PredicateResult vanishes_everywhere(const GLattice& m, AbGroupClass (*fn)(const Subgroup&, const GLattice&)) {
  auto all = subgroups(m.group());
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    AbGroupClass c = fn(*it, m);
    if (!c.is_trivial()) return {false, CohomologyWitness{*it, c}};
  }
  return {};
}

}  // namespace

PredicateResult is_coflasque(const GLattice& m) { return vanishes_everywhere(m, &h1); }

PredicateResult is_flasque(const GLattice& m) {
  PredicateResult direct = vanishes_everywhere(m, &tate_h_minus1);
  PredicateResult by_duality = is_coflasque(dual(m));
  if (direct.holds != by_duality.holds)
    throw Error(Errc::InternalDisagreement, "Ĥ^-1 and dual-coflasque tests disagree");
  return direct;
}

}  // namespace flasque
