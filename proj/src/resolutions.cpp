#include "flasque/resolutions.hpp"

#include <algorithm>

#include "flasque/error.hpp"
#include "flasque/normal_form.hpp"

namespace flasque {

GLattice permutation_sum(const GroupPtr& g, const std::vector<PermutationBlock>& blocks) {
  GLattice p = trivial_lattice(g, 0);
  for (const auto& b : blocks) {
    GLattice z = permutation_lattice(g, b.subgroup);
    for (std::size_t i = 0; i < b.multiplicity; ++i) p = direct_sum(p, z);
  }
  return p;
}

void verify_resolution(const CoflasqueResolution& r) {
  const auto& g = r.target.group();
  if (!(r.inj.domain() == r.F) || !(r.inj.codomain() == r.P) || !(r.surj.domain() == r.P) ||
      !(r.surj.codomain() == r.target))
    throw Error(Errc::DimensionMismatch, "resolution maps do not match their lattices");
  if (!(permutation_sum(g, r.blocks) == r.P)) throw Error(Errc::DimensionMismatch, "P does not match its blocks");
  if (!is_surjective(r.surj)) throw Error(Errc::SurjectivityFailure, "P -> M is not onto");
  if (!is_injective(r.inj) || !exactness_check(r.inj, r.surj))
    throw Error(Errc::SurjectivityFailure, "F -> P -> M is not exact");
  if (r.F.rank() + r.target.rank() != r.P.rank()) throw Error(Errc::InternalDisagreement, "rank additivity");
  for (const auto& h : subgroups(g))
    if (!h1(h, r.P).is_trivial()) throw Error(Errc::InternalDisagreement, "permutation lattice with H^1 != 0");
  auto c = is_coflasque(r.F);
  if (!c) {
    throw Error(Errc::CoflasquenessFailure,
                "H^1(" + c.witness->subgroup.name() + ", F) = " + c.witness->group.to_string());
  }
}

CoflasqueResolution resolution_from_surjection(const GLattice& target, std::vector<PermutationBlock> blocks,
                                               const IntMatrix& surj) {
  GLattice p = permutation_sum(target.group(), blocks);
  LatticeMap s(p, target, surj);
  if (!is_surjective(s)) throw Error(Errc::SurjectivityFailure, "P -> M is not onto");
  auto k = kernel_lattice(s);
  CoflasqueResolution r{target, p, std::move(blocks), k.lattice, k.inclusion, s};
  verify_resolution(r);
  return r;
}

namespace {

// Columns act(rep)·v for the coset representatives of H, v fixed by H.
IntMatrix orbit_columns(const GLattice& m, const Subgroup& h, const IntVector& v) {
  std::vector<IntVector> cols;
  for (const auto& coset : left_cosets(h)) cols.push_back(m.action(coset.front()) * v);
  return IntMatrix::from_columns(m.rank(), cols);
}

}  // namespace

CoflasqueResolution coflasque_resolution(const GLattice& m) {
  std::vector<PermutationBlock> blocks;
  std::vector<IntMatrix> columns;
  for (const auto& h : subgroups(m.group())) {
    auto fixed = fixed_sublattice(m, h);
    if (fixed.rank == 0) continue;
    blocks.push_back({h, fixed.rank});
    for (std::size_t i = 0; i < fixed.rank; ++i) columns.push_back(orbit_columns(m, h, fixed.basis.col(i)));
  }
  return resolution_from_surjection(m, std::move(blocks), hstack(columns, m.rank()));
}

CoflasqueResolution augmentation_ideal_resolution(const GroupPtr& g, const std::vector<int>& generators) {
  auto ig = augmentation_kernel(g);
  LinearSolver coords(ig.inclusion.matrix());
  std::vector<IntMatrix> columns;
  for (int s : generators) {
    IntVector one_minus_s = unit_vector(g->order(), static_cast<std::size_t>(g->identity())) -
                            unit_vector(g->order(), static_cast<std::size_t>(s));
    auto v = coords.solve(one_minus_s);
    columns.push_back(orbit_columns(ig.lattice, Subgroup::trivial(g), *v));
  }
  return resolution_from_surjection(ig.lattice, {{Subgroup::trivial(g), generators.size()}},
                                    hstack(columns, ig.lattice.rank()));
}

namespace {

bool is_permutation_matrix(const IntMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j) == 1) ++ones;
      else if (a(i, j) != 0) return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

std::size_t image_index(const IntMatrix& perm, std::size_t j) {
  for (std::size_t i = 0; i < perm.rows(); ++i)
    if (perm(i, j) == 1) return i;
  return perm.rows();
}

}  // namespace

CoflasqueResolution pullback_resolution(const CoflasqueResolution& res, const LatticeMap& f) {
  if (!(f.codomain() == res.target)) throw Error(Errc::TargetMismatch, "f does not land in the resolved lattice");
  if (!is_surjective(f)) throw Error(Errc::NotSurjective, "pullback along a non-surjective map");
  const GLattice& m = f.domain();
  const auto& g = m.group();
  auto k = kernel_lattice(f);
  for (const auto& a : k.lattice.actions())
    if (!is_permutation_matrix(a)) throw Error(Errc::KernelNotPermutation, "ker f has no permuted basis");

  // Split the kernel into orbits Z[G/Stab], listed in coset order.
  std::vector<PermutationBlock> blocks;
  std::vector<IntMatrix> columns;
  std::vector<bool> seen(k.lattice.rank(), false);
  for (std::size_t j = 0; j < k.lattice.rank(); ++j) {
    if (seen[j]) continue;
    std::vector<int> stab;
    for (int x = 0; x < static_cast<int>(g->order()); ++x) {
      const std::size_t to = image_index(k.lattice.action(x), j);
      seen[to] = true;
      if (to == j) stab.push_back(x);
    }
    Subgroup h(g, stab);
    blocks.push_back({h, 1});
    columns.push_back(orbit_columns(m, h, k.inclusion.matrix().col(j)));
  }
  IntMatrix kernel_part = hstack(columns, m.rank());

  // λ: P -> M with f∘λ = surj, one fixed vector per copy of Z[G/H].
  std::vector<IntMatrix> lambda;
  std::size_t offset = 0;
  for (const auto& b : res.blocks) {
    auto fixed = fixed_sublattice(m, b.subgroup);
    LinearSolver lift(f.matrix() * fixed.basis);
    const std::size_t width = g->order() / b.subgroup.order();
    for (std::size_t i = 0; i < b.multiplicity; ++i, offset += width) {
      auto c = lift.solve(res.surj.matrix().col(offset));
      if (!c) throw Error(Errc::NoSolution, "no equivariant lift through f");
      lambda.push_back(orbit_columns(m, b.subgroup, fixed.basis * *c));
    }
  }
  IntMatrix lambda_matrix = hstack(lambda, m.rank());

  blocks.insert(blocks.end(), res.blocks.begin(), res.blocks.end());
  GLattice p = permutation_sum(g, blocks);
  LatticeMap surj(p, m, hstack(kernel_part, lambda_matrix));

  auto kappa = LinearSolver(kernel_part).solve(-(lambda_matrix * res.inj.matrix()));
  if (!kappa) throw Error(Errc::InternalDisagreement, "λ∘inj does not land in ker f");
  LatticeMap inj(res.F, p, vstack(*kappa, res.inj.matrix()));

  CoflasqueResolution out{m, p, std::move(blocks), res.F, inj, surj};
  verify_resolution(out);
  return out;
}

bool ComparisonReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
}

ComparisonReport compare_resolutions(const CoflasqueResolution& r1, const CoflasqueResolution& r2) {
  if (!(r1.target == r2.target)) throw Error(Errc::TargetMismatch, "resolutions of different lattices");
  ComparisonReport report;
  auto add = [&](std::string condition, const std::string& l, const std::string& r) {
    report.entries.push_back({std::move(condition), l, r, l == r});
  };
  add("rank", std::to_string(r1.F.rank() + r2.P.rank()), std::to_string(r2.F.rank() + r1.P.rank()));
  const GLattice left = direct_sum(r1.F, r2.P);
  const GLattice right = direct_sum(r2.F, r1.P);
  for (const auto& h : subgroups(left.group())) {
    add("fixed rank " + h.name(), std::to_string(fixed_sublattice(left, h).rank),
        std::to_string(fixed_sublattice(right, h).rank));
    for (int d = -1; d <= 1; ++d)
      add("H^" + std::to_string(d) + " " + h.name(), tate_cohomology(h, left, d).to_string(),
          tate_cohomology(h, right, d).to_string());
  }
  return report;
}

}  // namespace flasque
