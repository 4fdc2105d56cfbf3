#include "flasque/gmodules.hpp"

#include "flasque/error.hpp"

namespace flasque {

FgAbGModule::FgAbGModule(GroupPtr group, std::size_t n_gens, IntMatrix relations, std::vector<IntMatrix> matrices)
    : group_(std::move(group)), n_gens_(n_gens), relations_(std::move(relations)), action_(std::move(matrices)) {
  if (relations_.rows() != n_gens_) throw Error(Errc::DimensionMismatch, "relations must have n_gens rows");
  if (action_.size() != group_->order()) throw Error(Errc::DimensionMismatch, "one action matrix per element");
  for (const auto& a : action_)
    if (a.rows() != n_gens_ || a.cols() != n_gens_) throw Error(Errc::DimensionMismatch, "action matrix shape");
  relation_solver_ = std::make_shared<const LinearSolver>(relations_);

  const IntMatrix id = IntMatrix::identity(n_gens_);
  if (!in_relations(action(group_->identity()) - id))
    throw Error(Errc::NotAHomomorphism, "identity does not act trivially");
  const auto n = static_cast<int>(group_->order());
  for (int g = 0; g < n; ++g) {
    if (!in_relations(action(g) * relations_))
      throw Error(Errc::NotStable, "relations are not stable under " + group_->label(g));
    for (int h = 0; h < n; ++h)
      if (!in_relations(action(group_->mul(g, h)) - action(g) * action(h)))
        throw Error(Errc::NotAHomomorphism, group_->label(g) + "·" + group_->label(h));
  }
}

bool FgAbGModule::is_zero(const ModuleElement& x) const {
  if (x.size() != n_gens_) throw Error(Errc::DimensionMismatch, "element length");
  return relation_solver_->solvable(x);
}

bool FgAbGModule::in_relations(const IntMatrix& vectors) const {
  for (std::size_t j = 0; j < vectors.cols(); ++j)
    if (!is_zero(vectors.col(j))) return false;
  return true;
}

bool FgAbGModule::is_fixed(const ModuleElement& x) const {
  for (const auto& a : action_)
    if (!is_zero(a * x - x)) return false;
  return true;
}

ModuleMap::ModuleMap(FgAbGModule domain, FgAbGModule codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!same_group(domain_.group(), codomain_.group())) throw Error(Errc::GroupMismatch, "module map");
  if (matrix_.rows() != codomain_.n_gens() || matrix_.cols() != domain_.n_gens())
    throw Error(Errc::DimensionMismatch, "module map matrix shape");
  if (!codomain_.in_relations(matrix_ * domain_.relations()))
    throw Error(Errc::NotEquivariant, "relations of the domain do not map to relations");
  for (int g = 0; g < static_cast<int>(domain_.group()->order()); ++g)
    if (!codomain_.in_relations(matrix_ * domain_.action(g) - codomain_.action(g) * matrix_))
      throw Error(Errc::NotEquivariant, "fails for " + domain_.group()->label(g));
}

FgAbGModule from_lattice(const GLattice& m) {
  return FgAbGModule(m.group(), m.rank(), IntMatrix(m.rank(), 0), m.actions());
}

FgAbGModule tensor_lattice_module(const GLattice& m, const FgAbGModule& a) {
  if (!same_group(m.group(), a.group())) throw Error(Errc::GroupMismatch, "tensor product");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < a.actions().size(); ++g) action.push_back(kronecker(m.actions()[g], a.actions()[g]));
  return FgAbGModule(m.group(), m.rank() * a.n_gens(), kronecker(IntMatrix::identity(m.rank()), a.relations()),
                     std::move(action));
}

ModuleMap tensor_map(const LatticeMap& f, const FgAbGModule& a) {
  return ModuleMap(tensor_lattice_module(f.domain(), a), tensor_lattice_module(f.codomain(), a),
                   kronecker(f.matrix(), IntMatrix::identity(a.n_gens())));
}

FgAbGModule direct_sum(const FgAbGModule& a, const FgAbGModule& b) {
  if (!same_group(a.group(), b.group())) throw Error(Errc::GroupMismatch, "direct sum");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < a.actions().size(); ++g) action.push_back(block_diagonal(a.actions()[g], b.actions()[g]));
  return FgAbGModule(a.group(), a.n_gens() + b.n_gens(), block_diagonal(a.relations(), b.relations()),
                     std::move(action));
}

FixedPoints fixed_points(const FgAbGModule& a) { return fixed_points(a, Subgroup::whole(a.group())); }

FixedPoints fixed_points(const FgAbGModule& a, const Subgroup& h) {
  if (!same_group(a.group(), h.parent())) throw Error(Errc::GroupMismatch, "fixed points");
  const std::size_t n = a.n_gens();
  const std::size_t r = a.relations().cols();
  const std::size_t k = h.order();
  // Unknowns (x, z_1, ..., z_k): (action(h_i) - id) x - R z_i = 0 for every i.
  IntMatrix system(k * n, n + k * r);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i) {
    const IntMatrix d = a.action(h.members()[i]) - id;
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t col = 0; col < n; ++col) system(i * n + row, col) = d(row, col);
      for (std::size_t col = 0; col < r; ++col) system(i * n + row, n + i * r + col) = -a.relations()(row, col);
    }
  }
  IntMatrix solutions = kernel_basis(system);
  IntMatrix lifts = image_basis(solutions.row_block(0, n));
  auto coords = LinearSolver(lifts).solve(a.relations());
  if (!coords) throw Error(Errc::InternalDisagreement, "relations are not fixed");
  return {std::move(lifts), std::move(*coords)};
}

FgAbGModule fixed_module(const FgAbGModule& a, const FixedPoints& f) {
  return FgAbGModule(a.group(), f.rank(), f.relations,
                     std::vector<IntMatrix>(a.group()->order(), IntMatrix::identity(f.rank())));
}

ModuleMap fixed_inclusion(const FgAbGModule& a, const FixedPoints& f) {
  return ModuleMap(fixed_module(a, f), a, f.lifts);
}

std::optional<ModuleElement> solve_preimage(const ModuleMap& f, const ModuleElement& y) {
  const std::size_t n = f.domain().n_gens();
  auto sol = solve(hstack(f.matrix(), f.codomain().relations()), y);
  if (!sol) return std::nullopt;
  ModuleElement x(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n));
  if (!f.codomain().equal(f(x), y)) throw Error(Errc::InternalDisagreement, "preimage does not map to the target");
  return x;
}

}  // namespace flasque
