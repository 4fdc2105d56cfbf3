#include "flasque/lattices.hpp"

#include <algorithm>

#include "flasque/error.hpp"
#include "flasque/normal_form.hpp"

namespace flasque {

GLattice::GLattice(GroupPtr group, std::vector<IntMatrix> matrices)
    : group_(std::move(group)), rank_(0), action_(std::move(matrices)) {
  const auto& g = *group_;
  if (action_.size() != g.order())
    throw Error(Errc::DimensionMismatch, "one action matrix per group element is required");
  rank_ = action_.front().rows();
  for (const auto& a : action_)
    if (a.rows() != rank_ || a.cols() != rank_) throw Error(Errc::DimensionMismatch, "action matrix shape");
  if (!(action(g.identity()) == IntMatrix::identity(rank_)))
    throw Error(Errc::NotAHomomorphism, "identity does not act trivially");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
      if (!(action(ab) == action_[a] * action_[b]))
        throw Error(Errc::NotAHomomorphism, "action(" + g.label(static_cast<int>(a)) + "·" +
                                                g.label(static_cast<int>(b)) + ") differs from the product");
    }
  for (std::size_t a = 0; a < g.order(); ++a) {
    Integer d = determinant(action_[a]);
    if (d != 1 && d != -1) throw Error(Errc::NotUnimodular, "action of " + g.label(static_cast<int>(a)));
  }
}

LatticeMap::LatticeMap(GLattice domain, GLattice codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!same_group(domain_.group(), codomain_.group())) throw Error(Errc::GroupMismatch, "lattice map");
  if (matrix_.rows() != codomain_.rank() || matrix_.cols() != domain_.rank())
    throw Error(Errc::DimensionMismatch, "lattice map matrix shape");
  const auto n = static_cast<int>(domain_.group()->order());
  for (int g = 0; g < n; ++g)
    if (!(matrix_ * domain_.action(g) == codomain_.action(g) * matrix_))
      throw Error(Errc::NotEquivariant, "fails for " + domain_.group()->label(g));
}

LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  if (!(g.codomain() == f.domain())) throw Error(Errc::DimensionMismatch, "composition of incompatible maps");
  return LatticeMap(g.domain(), f.codomain(), f.matrix() * g.matrix());
}

LatticeMap identity_map(const GLattice& m) { return LatticeMap(m, m, IntMatrix::identity(m.rank())); }

LatticeMap zero_map(const GLattice& domain, const GLattice& codomain) {
  return LatticeMap(domain, codomain, IntMatrix(codomain.rank(), domain.rank()));
}

GLattice trivial_lattice(const GroupPtr& g, std::size_t rank) {
  return GLattice(g, std::vector<IntMatrix>(g->order(), IntMatrix::identity(rank)));
}

std::vector<std::vector<int>> left_cosets(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<std::vector<int>> cosets;
  std::vector<bool> covered(g.order(), false);
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    std::vector<int> c;
    for (int m : h.members()) c.push_back(g.mul(x, m));
    std::sort(c.begin(), c.end());
    for (int y : c) covered[static_cast<std::size_t>(y)] = true;
    cosets.push_back(std::move(c));
  }
  // x runs upward, so each coset is discovered at its smallest member.
  return cosets;
}

std::size_t coset_index(const std::vector<std::vector<int>>& cosets, int x) {
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), x)) return i;
  throw Error(Errc::UnknownElement, "element not in any coset");
}

GLattice permutation_lattice(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(g, h.parent())) throw Error(Errc::GroupMismatch, "subgroup of another group");
  auto cosets = left_cosets(h);
  const std::size_t k = cosets.size();
  std::vector<IntMatrix> action;
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    IntMatrix p(k, k);
    for (std::size_t j = 0; j < k; ++j) p(coset_index(cosets, g->mul(x, cosets[j].front())), j) = 1;
    action.push_back(std::move(p));
  }
  return GLattice(g, std::move(action));
}

GLattice group_ring(const GroupPtr& g) { return permutation_lattice(g, Subgroup::trivial(g)); }

LatticeMap augmentation(const GroupPtr& g) {
  IntMatrix row(1, g->order());
  for (std::size_t j = 0; j < g->order(); ++j) row(0, j) = 1;
  return LatticeMap(group_ring(g), trivial_lattice(g, 1), row);
}

Sublattice augmentation_kernel(const GroupPtr& g) {
  const std::size_t n = g->order();
  const auto e = static_cast<std::size_t>(g->identity());
  IntMatrix basis(n, n - 1);
  std::size_t col = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == e) continue;
    basis(x, col) = 1;
    basis(e, col) = -1;
    ++col;
  }
  GLattice zg = group_ring(g);
  GLattice ig = sublattice_action(zg, basis);
  return {ig, LatticeMap(ig, zg, basis)};
}

GLattice direct_sum(const GLattice& m, const GLattice& n) {
  if (!same_group(m.group(), n.group())) throw Error(Errc::GroupMismatch, "direct sum");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < m.actions().size(); ++g)
    action.push_back(block_diagonal(m.actions()[g], n.actions()[g]));
  return GLattice(m.group(), std::move(action));
}

GLattice tensor(const GLattice& m, const GLattice& n) {
  if (!same_group(m.group(), n.group())) throw Error(Errc::GroupMismatch, "tensor product");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < m.actions().size(); ++g)
    action.push_back(kronecker(m.actions()[g], n.actions()[g]));
  return GLattice(m.group(), std::move(action));
}

GLattice dual(const GLattice& m) {
  std::vector<IntMatrix> action;
  for (int g = 0; g < static_cast<int>(m.group()->order()); ++g)
    action.push_back(m.action(m.group()->inverse(g)).transpose());
  return GLattice(m.group(), std::move(action));
}

GLattice restrict(const GLattice& m, const Subgroup& h) {
  if (!same_group(m.group(), h.parent())) throw Error(Errc::GroupMismatch, "restriction");
  std::vector<IntMatrix> action;
  for (int x : h.members()) action.push_back(m.action(x));
  return GLattice(subgroup_as_group(h), std::move(action));
}

GLattice sublattice_action(const GLattice& m, const IntMatrix& basis) {
  if (basis.rows() != m.rank()) throw Error(Errc::DimensionMismatch, "sublattice basis");
  if (rank(basis) != basis.cols()) throw Error(Errc::DimensionMismatch, "sublattice basis is dependent");
  if (basis.cols() == 0) return trivial_lattice(m.group(), 0);
  LinearSolver solver(basis);
  std::vector<IntMatrix> action;
  for (const auto& a : m.actions()) {
    auto coords = solver.solve(a * basis);
    if (!coords) throw Error(Errc::NotStable, "sublattice is not stable under the action");
    action.push_back(std::move(*coords));
  }
  return GLattice(m.group(), std::move(action));
}

FixedSublattice fixed_sublattice(const GLattice& m, const Subgroup& h) {
  if (!same_group(m.group(), h.parent())) throw Error(Errc::GroupMismatch, "fixed sublattice");
  std::vector<IntMatrix> blocks;
  for (int x : h.members()) blocks.push_back(m.action(x) - IntMatrix::identity(m.rank()));
  IntMatrix basis = kernel_basis(vstack(blocks, m.rank()));
  const std::size_t r = basis.cols();
  return {std::move(basis), r};
}

Sublattice kernel_lattice(const LatticeMap& f) {
  IntMatrix basis = kernel_basis(f.matrix());
  GLattice k = sublattice_action(f.domain(), basis);
  return {k, LatticeMap(k, f.domain(), basis)};
}

IntMatrix norm_operator(const GLattice& m) { return norm_operator(m, Subgroup::whole(m.group())); }

IntMatrix norm_operator(const GLattice& m, const Subgroup& h) {
  IntMatrix n(m.rank(), m.rank());
  for (int x : h.members()) n += m.action(x);
  return n;
}

bool is_injective(const LatticeMap& f) { return rank(f.matrix()) == f.domain().rank(); }

bool is_surjective(const LatticeMap& f) { return cokernel_class(f.matrix()).is_trivial(); }

namespace {

void check_composable(const LatticeMap& f, const LatticeMap& g) {
  if (!(f.codomain() == g.domain()))
    throw Error(Errc::DimensionMismatch, "codomain of the first map is not the domain of the second");
  if (!(g.matrix() * f.matrix()).is_zero()) throw Error(Errc::CompositionMismatch, "g∘f is not zero");
}

}  // namespace

AbGroupClass homology_at_middle(const LatticeMap& f, const LatticeMap& g) {
  check_composable(f, g);
  return quotient_class(kernel_basis(g.matrix()), f.matrix());
}

bool exactness_check(const LatticeMap& f, const LatticeMap& g) {
  check_composable(f, g);
  const IntMatrix kernel = kernel_basis(g.matrix());
  const bool by_hnf = kernel == image_basis(f.matrix());
  const bool by_divisors = quotient_class(kernel, f.matrix()).is_trivial();
  if (by_hnf != by_divisors)
    throw Error(Errc::InternalDisagreement, "HNF and elementary-divisor exactness tests disagree");
  return by_hnf;
}

}  // namespace flasque
