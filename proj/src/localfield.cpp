#include "flasque/localfield.hpp"

#include <numeric>

#include "flasque/error.hpp"
#include "flasque/normal_form.hpp"

namespace flasque {

using namespace klein;

FgAbGModule local_fragment() {
  std::vector<IntMatrix> act{
      IntMatrix::identity(3),
      IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 2, 1}},
      IntMatrix{{1, 0, 0}, {0, 1, 0}, {2, 0, 1}},
      IntMatrix{{1, 0, 0}, {0, 1, 0}, {2, 2, 1}},
  };
  return FgAbGModule(klein_four(), 3, IntMatrix{{0}, {0}, {4}}, act);
}

IntVector valuation_row() { return make_vector({1, 0, 0}); }

Integer valuation(const ModuleElement& x) { return dot(valuation_row(), x); }

LocalTorusPoint torus_point(const ModuleElement& t, const ModuleElement& x) {
  const FgAbGModule a = local_fragment();
  const IntMatrix& s = a.action(kSigma);
  const IntMatrix& u = a.action(kTau);
  if (!a.equal(s * t - t, x + u * x)) throw Error(Errc::NotOnTorus, "σ(t) - t != x + τ(x)");
  if (!a.equal(u * t - t, x + s * x)) throw Error(Errc::NotOnTorus, "τ(t) - t != x + σ(x)");
  IntVector norm = zero_vector(3);
  for (const auto& g : a.actions()) norm = norm + g * x;
  if (!a.is_zero(norm)) throw Error(Errc::NotOnTorus, "N_G(x) != 0");
  return {t, x};
}

std::optional<ModuleElement> tensor_point(const KleinData& k, const ModuleElement& t, const ModuleElement& x) {
  const FgAbGModule a = local_fragment();
  IntVector y;
  for (int g = 0; g < 4; ++g) {
    IntVector gt = a.action(g) * t;
    y.insert(y.end(), gt.begin(), gt.end());
  }
  for (int g = 1; g < 4; ++g) {
    IntVector gx = a.action(g) * x;
    y.insert(y.end(), gx.begin(), gx.end());
  }
  const std::size_t n = k.Tstar.rank() * 3;
  IntMatrix system = hstack(kronecker(k.embed.matrix(), IntMatrix::identity(3)),
                            kronecker(IntMatrix::identity(k.ambient.rank()), a.relations()));
  auto sol = solve(system, y);
  if (!sol) return std::nullopt;
  return ModuleElement(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n));
}

ModuleElement first_coordinate(const KleinData& k, const ModuleElement& z) {
  IntMatrix row = IntMatrix::row(k.embed.matrix().row_vector(0));
  return kronecker(row, IntMatrix::identity(3)) * z;
}

ModuleMap rt_image_map() {
  const FgAbGModule a = local_fragment();
  const FixedPoints kx = fixed_points(a);
  FgAbGModule domain = direct_sum(fixed_module(a, kx), direct_sum(a, a));
  IntMatrix m = hstack(kx.lifts, hstack(a.action(kSigma) + a.action(kSigmaTau), a.action(kTau) + a.action(kSigmaTau)));
  return ModuleMap(domain, a, m);
}

namespace {

Integer gcd_of(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

struct LocalSetting {
  KleinData k = build_T_star();
  FgAbGModule a = local_fragment();
  FgAbGModule tensor = tensor_lattice_module(k.Tstar, a);
  FixedPoints fixed = fixed_points(tensor);  // T(K)
};

// w applied coordinatewise: T_* ⊗ fragment -> T_*.
IntMatrix valuation_on_tensor(const KleinData& k) {
  return kronecker(IntMatrix::identity(k.Tstar.rank()), IntMatrix::row(valuation_row()));
}

}  // namespace

CheckReport verify_local_counterexample() {
  LocalSetting s;
  CheckReport report;
  const ModuleElement t = make_vector({1, 1, 0});  // √(uπ)
  const ModuleElement x = make_vector({0, 0, 1});  // i

  std::optional<ModuleElement> z;
  record_check(report, "local_torus_point", "(√(uπ), i) satisfies the torus equations and lies in (T_* ⊗ L^×)^G", [&] {
    torus_point(t, x);
    z = tensor_point(s.k, t, x);
    const bool fixed = z && s.tensor.is_fixed(*z) && s.a.equal(first_coordinate(s.k, *z), t);
    return std::pair{fixed, std::optional<std::string>(z ? "T_* ⊗ L^× coordinates " + to_string(*z) : "no lift")};
  });
  report.add("local_valuation_one", valuation(t) == 1, "the first coordinate √(uπ) has valuation 1",
             "w = " + valuation(t).get_str());

  const ModuleMap rt = rt_image_map();
  std::vector<Integer> vals;
  for (std::size_t j = 0; j < rt.matrix().cols(); ++j) vals.push_back(valuation(rt.matrix().col(j)));
  const bool all_even = std::all_of(vals.begin(), vals.end(), [](const Integer& v) { return v % 2 == 0; });
  report.add("rt_image_even", all_even, "every generator image of (α, β, γ) ↦ α·(1+τ)σβ·(1+σ)τγ has even valuation");
  const Integer g = gcd_of(vals);
  report.add("rt_image_valuations_2z", g == 2, "the valuations of the RT(K) image form the subgroup 2Z",
             "generator " + g.get_str());

  // P(K) = (P_* ⊗ L^×)^G -> T(K), checked against the formula on its generators.
  const CoflasqueResolution res = build_paper_resolution(s.k);
  const FgAbGModule p_tensor = tensor_lattice_module(res.P, s.a);
  const FixedPoints p_fixed = fixed_points(p_tensor);
  const IntMatrix surj_a = kronecker(res.surj.matrix(), IntMatrix::identity(3));
  bool formula = true;
  std::vector<Integer> rt_vals;
  for (std::size_t j = 0; j < p_fixed.rank(); ++j) {
    const IntVector q = p_fixed.lifts.col(j);
    const IntVector image_t = first_coordinate(s.k, surj_a * q);
    // Components at the distinguished basis vectors: Z block, then e_1 of each Z[G] block.
    const IntVector alpha(q.begin(), q.begin() + 3);
    const IntVector beta(q.begin() + 3, q.begin() + 6);
    const IntVector gamma(q.begin() + 15, q.begin() + 18);
    const IntVector expected = alpha + (s.a.action(kSigma) + s.a.action(kSigmaTau)) * beta +
                               (s.a.action(kTau) + s.a.action(kSigmaTau)) * gamma;
    formula = formula && s.a.equal(image_t, expected);
    rt_vals.push_back(valuation(image_t));
  }
  report.add("rt_formula_matches_resolution", formula && gcd_of(rt_vals) == 2,
             "P(K) -> T(K) -> L^× computed through P_* ⊗ L^× agrees with the formula and has valuations 2Z");

  // T(O_K) = ker(T(K) -> T_*^G); its first coordinates have valuation 0.
  const IntMatrix wt = valuation_on_tensor(s.k) * s.fixed.lifts;
  const IntMatrix compact = s.fixed.lifts * kernel_basis(wt);
  bool compact_zero = true;
  for (std::size_t j = 0; j < compact.cols(); ++j)
    compact_zero = compact_zero && valuation(first_coordinate(s.k, compact.col(j))) == 0;
  report.add("compact_valuation_zero", compact_zero, "every element of T(O_K) has first coordinate of valuation 0");

  // The point is not in T(O_K)·RT(K): solve for it in the span of both images.
  record_check(report, "local_verdict", "(√(uπ), i) is not in T(O_K)·RT(K), so T(K) ≠ T(O_K)·RT(K)", [&] {
    if (!z) return std::pair{false, std::optional<std::string>("point not constructed")};
    FgAbGModule compact_rt = direct_sum(fixed_module(p_tensor, p_fixed),
                                        FgAbGModule(s.a.group(), compact.cols(), IntMatrix(compact.cols(), 0),
                                                    std::vector<IntMatrix>(4, IntMatrix::identity(compact.cols()))));
    ModuleMap both(compact_rt, s.tensor, hstack(surj_a * p_fixed.lifts, compact));
    const bool unreachable = !solve_preimage(both, *z).has_value();
    const bool parity = valuation(t) % 2 != 0 && all_even && compact_zero;
    return std::pair{unreachable && parity,
                     std::optional<std::string>("valuation 1 is odd; RT(K) gives 2Z and T(O_K) gives 0")};
  });
  return report;
}

CheckReport verify_phi_eq_e_psi() {
  LocalSetting s;
  CheckReport report;
  const auto chars = fixed_sublattice(dual(s.k.Tstar), Subgroup::whole(s.k.G));  // basis of T^{*G}
  const IntMatrix w_tensor = valuation_on_tensor(s.k);
  const std::size_t k = s.fixed.rank();

  // φ: T(K) -> T_*^G -> Hom(T^{*G}, Z) and ψ: character pointwise, then v = w/2.
  IntMatrix phi(chars.rank, k), psi(chars.rank, k);
  bool in_k = true;
  for (std::size_t j = 0; j < k; ++j) {
    const IntVector z = s.fixed.lifts.col(j);
    const IntVector cocharacter = w_tensor * z;
    for (std::size_t c = 0; c < chars.rank; ++c) {
      phi(c, j) = dot(chars.basis.col(c), cocharacter);
      const IntVector pointwise = kronecker(IntMatrix::row(chars.basis.col(c)), IntMatrix::identity(3)) * z;
      in_k = in_k && s.a.is_fixed(pointwise) && valuation(pointwise) % 2 == 0;
      psi(c, j) = valuation(pointwise) / 2;
    }
  }
  report.add("phi_eq_e_psi", in_k && phi == Integer(2) * psi,
             "φ_{K,L} = 2·ψ_K on every generator of (T_* ⊗ L^×)^G", "φ = " + to_string(phi) + ", ψ = " + to_string(psi));

  // ker ψ and the valuation-0 points, both as subgroups of T(K) modulo relations.
  const IntMatrix& rel = s.tensor.relations();
  const IntMatrix ker_psi = s.fixed.lifts * kernel_basis(psi);
  const IntMatrix t_valuation = kronecker(IntMatrix::row(s.k.embed.matrix().row_vector(0)), IntMatrix::row(valuation_row()));
  const IntMatrix zero_val = s.fixed.lifts * kernel_basis(t_valuation * s.fixed.lifts);
  report.add("psi_kernel_valuation_zero", image_basis(hstack(ker_psi, rel)) == image_basis(hstack(zero_val, rel)),
             "the kernel of ψ_K is the subgroup of points whose first coordinate has valuation 0");

  const auto z = tensor_point(s.k, make_vector({1, 1, 0}), make_vector({0, 0, 1}));
  record_check(report, "phi_psi_on_witness", "on (√(uπ), i) the φ-value is twice the ψ-value", [&] {
    if (!z) return std::pair{false, std::optional<std::string>()};
    const IntVector cocharacter = w_tensor * *z;
    bool ok = true;
    std::string w;
    for (std::size_t c = 0; c < chars.rank; ++c) {
      const Integer p = dot(chars.basis.col(c), cocharacter);
      const IntVector pointwise = kronecker(IntMatrix::row(chars.basis.col(c)), IntMatrix::identity(3)) * *z;
      ok = ok && p == valuation(pointwise);
      w += (w.empty() ? "" : "; ") + std::string("φ = ") + p.get_str() + ", w(pointwise) = " + valuation(pointwise).get_str();
    }
    return std::pair{ok, std::optional<std::string>(w)};
  });
  return report;
}

}  // namespace flasque
