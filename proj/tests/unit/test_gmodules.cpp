#include "doctest.h"
#include "flasque/error.hpp"
#include "flasque/gmodules.hpp"

using namespace flasque;

namespace {

// Z/4 on one generator, σ and τ acting by -1, στ trivially.
FgAbGModule sign_z4(const GroupPtr& g) {
  std::vector<IntMatrix> act;
  for (int x = 0; x < 4; ++x) act.push_back(IntMatrix{{(x == 1 || x == 2) ? -1 : 1}});
  return FgAbGModule(g, 1, IntMatrix{{4}}, act);
}

// Z ⊕ Z/2 with τ sending (a, b) to (a, a + b).
FgAbGModule twisted(const GroupPtr& g) {
  std::vector<IntMatrix> act;
  for (int x = 0; x < 4; ++x) act.push_back(x >= 2 ? IntMatrix{{1, 0}, {1, 1}} : IntMatrix::identity(2));
  return FgAbGModule(g, 2, IntMatrix{{0}, {2}}, act);
}

// Brute force: residues of the box that are G-fixed modulo relations.
int count_fixed_classes(const FgAbGModule& a, long bound) {
  std::vector<IntVector> classes;
  std::vector<long> idx(a.n_gens(), -bound);
  int fixed = 0;
  while (true) {
    IntVector x;
    for (long v : idx) x.push_back(v);
    bool fresh = true;
    for (const auto& c : classes) fresh = fresh && !a.equal(c, x);
    if (fresh) {
      classes.push_back(x);
      fixed += a.is_fixed(x);
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] > bound) idx[i++] = -bound;
    if (i == idx.size()) break;
  }
  return fixed;
}

}  // namespace

TEST_CASE("from_lattice") {
  auto g = klein_four();
  auto z = from_lattice(trivial_lattice(g, 1));
  CHECK(z.n_gens() == 1);
  CHECK(z.relations().cols() == 0);
  auto ig = augmentation_kernel(g).lattice;
  auto m = from_lattice(ig);
  CHECK(m.n_gens() == 3);
  CHECK(m.actions() == ig.actions());
}

TEST_CASE("module validation") {
  auto g = klein_four();
  std::vector<IntMatrix> bad(4, IntMatrix{{1}});
  bad[1] = IntMatrix{{2}};
  CHECK_THROWS_AS(FgAbGModule(g, 1, IntMatrix{{4}}, bad), Error);  // 2·2 ≢ 1 mod 4
  bad[1] = IntMatrix{{3}};
  CHECK_NOTHROW(FgAbGModule(g, 1, IntMatrix{{8}}, {IntMatrix{{1}}, IntMatrix{{3}}, IntMatrix{{1}}, IntMatrix{{3}}}));
  CHECK_THROWS_AS(FgAbGModule(g, 1, IntMatrix{{8}}, {IntMatrix{{1}}, IntMatrix{{3}}, IntMatrix{{3}}, IntMatrix{{3}}}),
                  Error);
}

TEST_CASE("fixed points agree with brute force") {
  auto g = klein_four();
  auto a = sign_z4(g);
  auto f = fixed_points(a);
  CHECK(f.abelian_class().to_string() == "Z/2");
  CHECK(count_fixed_classes(a, 2) == 2);
  auto t = twisted(g);
  auto ft = fixed_points(t);
  // (a, b) is fixed iff a is even; the classes are 2Z ⊕ Z/2.
  CHECK(ft.abelian_class().to_string() == "Z + Z/2");
  for (std::size_t j = 0; j < ft.rank(); ++j) CHECK(t.is_fixed(ft.lifts.col(j)));
  CHECK_FALSE(t.is_fixed(make_vector({1, 0})));
  CHECK(t.is_fixed(make_vector({2, 1})));
}

TEST_CASE("fixed points of lattices and trivial modules") {
  for (const auto& g : {klein_four(), symmetric_group_3()}) {
    auto ig = augmentation_kernel(g).lattice;
    for (const auto& m : {trivial_lattice(g, 2), group_ring(g), ig, dual(ig)})
      for (const auto& h : subgroups(g)) {
        auto f = fixed_points(from_lattice(m), h);
        CHECK(f.abelian_class().free_rank() == fixed_sublattice(m, h).rank);
        CHECK(f.abelian_class().is_finite() == (f.rank() == 0));
      }
  }
  auto g = klein_four();
  FgAbGModule trivial(g, 2, IntMatrix{{3}, {0}}, std::vector<IntMatrix>(4, IntMatrix::identity(2)));
  CHECK(fixed_points(trivial).abelian_class() == trivial.abelian_class());
}

TEST_CASE("fixed lifts are permuted trivially") {
  auto g = klein_four();
  for (const auto& a : {sign_z4(g), twisted(g), tensor_lattice_module(augmentation_kernel(g).lattice, sign_z4(g))}) {
    auto f = fixed_points(a);
    for (int x = 0; x < 4; ++x)
      for (std::size_t j = 0; j < f.rank(); ++j) CHECK(a.equal(a.action(x) * f.lifts.col(j), f.lifts.col(j)));
  }
}

TEST_CASE("tensor products") {
  auto g = klein_four();
  auto a = twisted(g);
  auto za = tensor_lattice_module(trivial_lattice(g, 1), a);
  CHECK(za.relations() == a.relations());
  CHECK(za.actions() == a.actions());
  CHECK(tensor_lattice_module(trivial_lattice(g, 0), a).n_gens() == 0);
  // Z[G] ⊗ A is induced, so its fixed points are A as an abelian group.
  for (const auto& m : {sign_z4(g), twisted(g)})
    CHECK(fixed_points(tensor_lattice_module(group_ring(g), m)).abelian_class() == m.abelian_class());
  auto ig = augmentation_kernel(g).lattice;
  auto split = tensor_lattice_module(direct_sum(ig, trivial_lattice(g, 1)), a);
  auto sum = direct_sum(tensor_lattice_module(ig, a), tensor_lattice_module(trivial_lattice(g, 1), a));
  CHECK(split.relations() == sum.relations());
  CHECK(split.actions() == sum.actions());
}

TEST_CASE("preimages") {
  auto g = klein_four();
  auto z = from_lattice(trivial_lattice(g, 1));
  auto id = ModuleMap(z, z, IntMatrix{{1}});
  CHECK(solve_preimage(id, make_vector({5})) == make_vector({5}));
  auto twice = ModuleMap(z, z, IntMatrix{{2}});
  CHECK_FALSE(solve_preimage(twice, make_vector({3})).has_value());
  auto a = sign_z4(g);
  // Z -> Z/4 with trivial Z only maps equivariantly onto 2-torsion.
  CHECK_THROWS_AS(ModuleMap(z, a, IntMatrix{{1}}), Error);
  auto two = ModuleMap(z, a, IntMatrix{{2}});
  CHECK(solve_preimage(two, make_vector({6})).has_value());
  CHECK_FALSE(solve_preimage(two, make_vector({1})).has_value());
  auto x = solve_preimage(two, make_vector({-2}));
  REQUIRE(x.has_value());
  CHECK(a.equal(two(*x), make_vector({2})));
}
