#include "doctest.h"
#include "flasque/error.hpp"
#include "flasque/localfield.hpp"
#include "flasque/normal_form.hpp"

using namespace flasque;

namespace {

// √π^e1 · √u^e2 · i^m, acted on by sign flips: σ negates √u, τ negates √π,
// and a sign is i².
struct Unit {
  long e1, e2, m;
};

Unit act(int g, Unit a) {
  long flips = 0;
  if (g & 1) flips += a.e2;
  if (g & 2) flips += a.e1;
  return {a.e1, a.e2, (((a.m + 2 * flips) % 4) + 4) % 4};
}

Unit mul(Unit a, Unit b) { return {a.e1 + b.e1, a.e2 + b.e2, (a.m + b.m) % 4}; }
bool same(Unit a, Unit b) { return a.e1 == b.e1 && a.e2 == b.e2 && (a.m - b.m) % 4 == 0; }
IntVector vec(Unit a) { return make_vector({a.e1, a.e2, a.m}); }

bool oracle_on_torus(Unit t, Unit x) {
  // σ(t)/t = x·τ(x), τ(t)/t = x·σ(x), N(x) = 1
  auto quotient = [](Unit a, Unit b) { return Unit{a.e1 - b.e1, a.e2 - b.e2, ((a.m - b.m) % 4 + 4) % 4}; };
  Unit n{0, 0, 0};
  for (int g = 0; g < 4; ++g) n = mul(n, act(g, x));
  return same(quotient(act(1, t), t), mul(x, act(2, x))) && same(quotient(act(2, t), t), mul(x, act(1, x))) &&
         same(n, {0, 0, 0});
}

void require_all_pass(const CheckReport& r) {
  for (const auto& rec : r.records()) {
    INFO(rec.id << " " << rec.witness.value_or(""));
    CHECK(rec.passed);
  }
}

}  // namespace

TEST_CASE("fragment action matches the sign rules") {
  FgAbGModule a = local_fragment();
  for (long e1 = -2; e1 <= 2; ++e1)
    for (long e2 = -2; e2 <= 2; ++e2)
      for (long m = 0; m < 4; ++m)
        for (int g = 0; g < 4; ++g) {
          Unit u{e1, e2, m};
          CHECK(a.equal(a.action(g) * vec(u), vec(act(g, u))));
          // valuation is Galois invariant
          CHECK(valuation(a.action(g) * vec(u)) == e1);
        }
  // faithful: distinct elements differ on √π or √u
  for (int g = 0; g < 4; ++g)
    for (int h = g + 1; h < 4; ++h) {
      const bool on_pi = a.equal(a.action(g) * make_vector({1, 0, 0}), a.action(h) * make_vector({1, 0, 0}));
      const bool on_u = a.equal(a.action(g) * make_vector({0, 1, 0}), a.action(h) * make_vector({0, 1, 0}));
      CHECK_FALSE((on_pi && on_u));
    }
}

TEST_CASE("w(δ·g(δ)) = 2·w(δ)") {
  FgAbGModule a = local_fragment();
  for (long e1 = -3; e1 <= 3; ++e1)
    for (long e2 = -2; e2 <= 2; ++e2)
      for (int g = 0; g < 4; ++g) {
        IntVector d = make_vector({e1, e2, 1});
        CHECK(valuation(d + a.action(g) * d) == 2 * valuation(d));
      }
}

TEST_CASE("K^× fragment is the even-exponent part") {
  FgAbGModule a = local_fragment();
  FixedPoints f = fixed_points(a);
  CHECK(f.abelian_class() == AbGroupClass::from_cyclic_orders(2, make_vector({4})));
  IntMatrix span = hstack(f.lifts, a.relations());
  LinearSolver s(span);
  for (long e1 = -3; e1 <= 3; ++e1)
    for (long e2 = -3; e2 <= 3; ++e2)
      for (long m = 0; m < 4; ++m) {
        Unit u{e1, e2, m};
        bool fixed = true;
        for (int g = 0; g < 4; ++g) fixed = fixed && same(act(g, u), u);
        CHECK(fixed == (e1 % 2 == 0 && e2 % 2 == 0));
        CHECK(fixed == s.solvable(vec(u)));
        CHECK(fixed == a.is_fixed(vec(u)));
      }
}

TEST_CASE("torus equations") {
  CHECK_NOTHROW(torus_point(make_vector({1, 1, 0}), make_vector({0, 0, 1})));
  CHECK_NOTHROW(torus_point(zero_vector(3), zero_vector(3)));
  try {
    torus_point(make_vector({1, 0, 0}), zero_vector(3));
    FAIL("accepted √π with x = 1");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOnTorus);
  }
  CHECK_THROWS_AS(torus_point(make_vector({1, 1, 0}), make_vector({0, 0, 2})), Error);
}

TEST_CASE("torus equations agree with fixed points of T_* ⊗ L^×") {
  KleinData k = build_T_star();
  FgAbGModule tensor = tensor_lattice_module(k.Tstar, local_fragment());
  int accepted = 0;
  for (long e1 = -2; e1 <= 2; ++e1)
    for (long e2 = -2; e2 <= 2; ++e2)
      for (long m = 0; m < 4; ++m)
        for (long a = -1; a <= 1; ++a)
          for (long b = -1; b <= 1; ++b)
            for (long c = 0; c < 4; c += 1) {
              Unit t{e1, e2, m}, x{a, b, c};
              const bool oracle = oracle_on_torus(t, x);
              bool thrown = false;
              try {
                torus_point(vec(t), vec(x));
              } catch (const Error& e) {
                thrown = e.code() == Errc::NotOnTorus;
              }
              CHECK(oracle == !thrown);
              auto z = tensor_point(k, vec(t), vec(x));
              CHECK(oracle == z.has_value());
              if (z) {
                CHECK(tensor.is_fixed(*z));
                CHECK(local_fragment().equal(first_coordinate(k, *z), vec(t)));
                ++accepted;
              }
            }
  CHECK(accepted > 10);
}

TEST_CASE("RT(K) image has valuations 2Z") {
  ModuleMap rt = rt_image_map();
  FgAbGModule a = local_fragment();
  // α + σβ + στβ + τγ + στγ by the sign rules, for a sweep of β, γ
  for (long e1 = -2; e1 <= 2; ++e1)
    for (long e2 = -2; e2 <= 2; ++e2)
      for (long m = 0; m < 4; ++m) {
        Unit beta{e1, e2, m}, gamma{e2, e1, m};
        Unit expected = mul(mul(act(1, beta), act(3, beta)), mul(act(2, gamma), act(3, gamma)));
        IntVector in = zero_vector(rt.domain().n_gens());
        IntVector b = vec(beta), g = vec(gamma);
        const std::size_t off = rt.domain().n_gens() - 6;
        for (std::size_t i = 0; i < 3; ++i) {
          in[off + i] = b[i];
          in[off + 3 + i] = g[i];
        }
        CHECK(a.equal(rt(in), vec(expected)));
        CHECK(valuation(rt(in)) % 2 == 0);
      }
}

TEST_CASE("local counterexample report") {
  CheckReport r = verify_local_counterexample();
  require_all_pass(r);
  for (const char* id : {"local_torus_point", "local_valuation_one", "rt_image_even", "rt_image_valuations_2z",
                         "compact_valuation_zero", "local_verdict", "rt_formula_matches_resolution"})
    CHECK(r.find(id) != nullptr);
}

TEST_CASE("φ = 2ψ") {
  CheckReport r = verify_phi_eq_e_psi();
  require_all_pass(r);
  CHECK(r.find("phi_eq_e_psi") != nullptr);
  CHECK(r.find("psi_kernel_valuation_zero") != nullptr);
}
