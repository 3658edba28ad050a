#include "qbundle/calculus.hpp"

#include <algorithm>

#include "qbundle/errors.hpp"

namespace qb {

namespace {

LinearMap id(std::size_t n) { return LinearMap::identity(n); }

}  // namespace

// ------------------------------------------------------- UniversalCalculus

UniversalCalculus::UniversalCalculus(GaloisContext ctx) : ctx_(std::move(ctx)) {
  const ComoduleAlgebraData& p = ctx_.comodule();
  const AlgebraData& alg = p.algebra();
  const std::size_t n = p.dim_p();

  omega1P_ = kernel(alg.mult());
  for (std::size_t i = 0; i < n; ++i) {
    left_.push_back(tensor_map(alg.left_mult(i), id(n)));
    right_.push_back(tensor_map(id(n), alg.right_mult(i)));
  }

  // p⊗bp' - pb⊗p' = p·(1⊗b - b⊗1)·p'
  const Subspace& b = ctx_.coinvariants();
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Vector bk = b.basis_vector(k);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector pb = alg.product(unit_vector(n, i), bk);
      for (std::size_t j = 0; j < n; ++j)
        gens.push_back(kron(unit_vector(n, i), alg.product(bk, unit_vector(n, j))) - kron(pb, unit_vector(n, j)));
    }
  }
  omega1B_ = Subspace::span(n * n, gens);
  if (!contains(omega1P_, omega1B_)) throw InternalError("P(Ω¹B)P is not inside Ω¹P");
  omega1B_coords_ = to_omega(omega1B_);

  hplus_ = augmentation_ideal(p.hopf());
  p_hplus_ = tensor_subspace(Subspace::full(n), hplus_);
  if (!(p_hplus_.basis() == kron(Matrix::identity(n), hplus_.basis())))
    throw InternalError("P⊗H⁺ basis is not in lexicographic order");

  const LinearMap restricted = compose(ctx_.lifted_can(), omega1P_.inclusion());
  if (!contains(p_hplus_, image(restricted))) throw InternalError("can̄ does not land in P⊗H⁺");
  can_bar_ = compose(p_hplus_.coordinate_map(), restricted);
}

Vector UniversalCalculus::differential(std::size_t i) const {
  const AlgebraData& alg = comodule().algebra();
  const Vector e = unit_vector(alg.dim(), i);
  return kron(alg.unit(), e) - kron(e, alg.unit());
}

Subspace UniversalCalculus::to_omega(const Subspace& in_pp) const {
  if (!contains(omega1P_, in_pp)) throw HypothesisViolation("subspace of P⊗P is not contained in Ω¹P");
  return map_subspace(omega1P_.coordinate_map(), in_pp);
}

Subspace UniversalCalculus::from_omega(const Subspace& coords) const {
  return map_subspace(omega1P_.inclusion(), coords);
}

Subspace UniversalCalculus::to_hplus(const Subspace& in_h) const {
  if (!contains(hplus_, in_h)) throw HypothesisViolation("V is not contained in H⁺");
  return map_subspace(hplus_.coordinate_map(), in_h);
}

Subspace UniversalCalculus::p_tensor(const Subspace& v_in_h) const {
  return tensor_subspace(Subspace::full(dim_p()), to_hplus(v_in_h));
}

std::shared_ptr<const UniversalCalculus> universal_calculus(const GaloisContext& ctx) {
  return std::make_shared<const UniversalCalculus>(ctx);
}

bool sequence_e_exact(const UniversalCalculus& uc) {
  return kernel(uc.can_bar()) == uc.omega1B_coords() && rank(uc.can_bar()) == uc.p_hplus_dim();
}

Prop2Report prop2_equivalence(const GaloisContext& ctx) {
  const UniversalCalculus uc(ctx);
  Prop2Report r;
  r.galois = is_galois(ctx);
  r.sequence_exact = sequence_e_exact(uc);
  r.can_rank = rank(ctx.can());
  r.balanced_dim = ctx.balanced().quotient_dim();
  r.coinvariants_dim = ctx.coinvariants().dim();
  r.omega1P_dim = uc.omega_dim();
  r.omega1B_dim = uc.omega1B_span().dim();
  r.ker_can_bar_dim = kernel(uc.can_bar()).dim();
  r.image_can_bar_dim = rank(uc.can_bar());
  r.p_hplus_dim = uc.p_hplus_dim();
  return r;
}

// ------------------------------------------------------------- bimodules

Subspace subbimodule_closure(const UniversalCalculus& uc, const Subspace& generators) {
  if (!contains(uc.omega1P(), generators)) throw HypothesisViolation("N_P generators are not contained in Ω¹P");
  Subspace current = generators;
  for (;;) {
    Matrix stacked = current.basis();
    for (std::size_t i = 0; i < uc.dim_p(); ++i) {
      stacked = vstack(stacked, map_subspace(uc.left_action(i), current).basis());
      stacked = vstack(stacked, map_subspace(uc.right_action(i), current).basis());
    }
    Subspace next = Subspace::span(current.ambient_dim(), stacked);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

Subspace subbimodule_closure(const UniversalCalculus& uc, const std::vector<Vector>& generators) {
  const std::size_t n = uc.dim_p();
  return subbimodule_closure(uc, Subspace::span(n * n, generators));
}

bool is_subbimodule(const UniversalCalculus& uc, const Subspace& n_p) {
  if (!contains(uc.omega1P(), n_p)) return false;
  for (std::size_t i = 0; i < uc.dim_p(); ++i) {
    if (!contains(n_p, map_subspace(uc.left_action(i), n_p))) return false;
    if (!contains(n_p, map_subspace(uc.right_action(i), n_p))) return false;
  }
  return true;
}

bool compat_check(const UniversalCalculus& uc, const Subspace& n_p, const Subspace& v, CompatMode mode) {
  const Subspace img = map_subspace(uc.can_bar(), uc.to_omega(n_p));
  const Subspace pv = uc.p_tensor(v);
  return mode == CompatMode::equality ? img == pv : contains(pv, img);
}

// ---------------------------------------------------------- CalculusPair

CalculusPair build_chi(std::shared_ptr<const UniversalCalculus> ucp, const Subspace& n_p, const Subspace& v) {
  const UniversalCalculus& uc = *ucp;
  if (n_p.ambient_dim() != uc.dim_p() * uc.dim_p()) throw DimensionError("N_P must live in P⊗P");
  if (v.ambient_dim() != uc.dim_h()) throw DimensionError("V must live in H");
  if (!contains(uc.omega1P(), n_p)) throw HypothesisViolation("N_P is not contained in Ω¹P");
  if (!is_subbimodule(uc, n_p)) throw NotSubbimodule("N_P is not a P-subbimodule of Ω¹P");
  if (!contains(uc.hplus(), v)) throw HypothesisViolation("V is not contained in H⁺");
  if (!compat_check(uc, n_p, v, CompatMode::inclusion))
    throw CompatibilityViolation("can̄(N_P) is not contained in P⊗V");

  CalculusPair cp;
  cp.uc_ = std::move(ucp);
  cp.n_p_ = n_p;
  cp.n_p_coords_ = uc.to_omega(n_p);
  cp.v_ = v;
  cp.v_coords_ = uc.to_hplus(v);
  cp.p_v_ = tensor_subspace(Subspace::full(uc.dim_p()), cp.v_coords_);
  cp.omega1_quotient_ = quotient(uc.omega_dim(), cp.n_p_coords_);
  cp.hplus_quotient_ = quotient(uc.hplus().dim(), cp.v_coords_);
  cp.codomain_quotient_ = quotient(uc.p_hplus_dim(), cp.p_v_);

  const LinearMap id_pi = tensor_map(id(uc.dim_p()), cp.hplus_quotient_.projection());
  if (!(cp.codomain_quotient_.projection() == id_pi))
    throw InternalError("(P⊗H⁺)/(P⊗V) does not match P⊗(H⁺/V)");

  try {
    cp.chi_ = induced_map(uc.can_bar(), cp.omega1_quotient_, cp.codomain_quotient_);
  } catch (const WellDefinednessError&) {
    throw CompatibilityViolation("χ is not well defined");
  }
  if (!(compose(cp.chi_, cp.omega1_quotient_.projection()) == compose(id_pi, uc.can_bar())))
    throw InternalError("χ∘π_P != (id⊗π_H)∘can̄");

  cp.chi_bar_ = compose(cp.p_v_.coordinate_map(), compose(uc.can_bar(), cp.n_p_coords_.inclusion()));
  cp.horizontal_ = map_subspace(cp.omega1_quotient_.projection(), uc.omega1B_coords());
  return cp;
}

bool compat_check(const CalculusPair& cp, CompatMode mode) {
  return compat_check(cp.uc(), cp.n_p(), cp.v(), mode);
}

bool sequence_e3_exact(const CalculusPair& cp) {
  return kernel(cp.chi()) == cp.horizontal_image() && rank(cp.chi()) == cp.chi().codomain_dim();
}

bool condition_np_ker(const CalculusPair& cp) {
  return contains(cp.uc().omega1B_coords(), intersect(cp.n_p_coords(), kernel(cp.uc().can_bar())));
}

Subspace kernel_chi_bar(const CalculusPair& cp) {
  return map_subspace(cp.n_p_coords().inclusion(), kernel(cp.chi_bar()));
}

namespace {

OracleReport describe(const CalculusPair& cp) {
  const UniversalCalculus& uc = cp.uc();
  OracleReport r;
  r.galois = is_galois(uc.context());
  r.e3_exact = sequence_e3_exact(cp);
  r.condition = condition_np_ker(cp);
  r.compat_equality = compat_check(cp, CompatMode::equality);
  r.compat_inclusion = compat_check(cp, CompatMode::inclusion);
  r.p_v_in_image = contains(map_subspace(uc.can_bar(), cp.n_p_coords()), cp.p_v());
  r.n_p_dim = cp.n_p().dim();
  r.v_dim = cp.v().dim();
  r.omega1_quotient_dim = cp.omega1_quotient().quotient_dim();
  r.ker_can_bar_dim = kernel(uc.can_bar()).dim();
  r.omega1B_dim = uc.omega1B_span().dim();
  r.horizontal_dim = cp.horizontal_image().dim();
  const std::size_t chi_rank = rank(cp.chi());
  r.ker_chi_dim = cp.chi().domain_dim() - chi_rank;
  r.coker_chi_dim = cp.chi().codomain_dim() - chi_rank;
  const std::size_t chi_bar_rank = rank(cp.chi_bar());
  r.ker_chi_bar_dim = cp.chi_bar().domain_dim() - chi_bar_rank;
  r.coker_chi_bar_dim = cp.chi_bar().codomain_dim() - chi_bar_rank;
  r.coker_can_bar_dim = uc.p_hplus_dim() - rank(uc.can_bar());
  r.side2 = r.e3_exact && r.condition;
  return r;
}

}  // namespace

OracleReport prop3_oracle(std::shared_ptr<const UniversalCalculus> uc, const Subspace& n_p, const Subspace& v) {
  if (!compat_check(*uc, n_p, v, CompatMode::equality))
    throw HypothesisViolation("compatibility can_bar(N_P) = P⊗V fails");
  OracleReport r = describe(build_chi(std::move(uc), n_p, v));
  r.side1 = r.galois;
  return r;
}

OracleReport prop4_oracle(std::shared_ptr<const UniversalCalculus> uc, const Subspace& n_p, const Subspace& v) {
  if (!can_surjective(uc->context())) throw HypothesisViolation("can surjective fails");
  if (!compat_check(*uc, n_p, v, CompatMode::inclusion))
    throw HypothesisViolation("compatibility can_bar(N_P) ⊆ P⊗V fails");
  OracleReport r = describe(build_chi(std::move(uc), n_p, v));
  if (r.coker_can_bar_dim != 0) throw InternalError("can is surjective but Coker can̄ is nonzero");
  r.side1 = r.galois && r.p_v_in_image;
  return r;
}

// ------------------------------------------------------------- covariance

LinearMap diagonal_coaction(const ComoduleAlgebraData& p) {
  const std::size_t dp = p.dim_p();
  const std::size_t dh = p.dim_h();
  // (p₀⊗p₁)⊗(p'₀⊗p'₁) -> p₀⊗p'₀⊗p₁⊗p'₁ -> p₀⊗p'₀⊗p₁p'₁
  const LinearMap multiply = tensor_map(id(dp * dp), p.hopf().algebra().mult());
  return compose(multiply, swap_middle(tensor_map(p.coaction(), p.coaction()), dp, dh, dp, dh));
}

bool right_covariant(const UniversalCalculus& uc, const Subspace& n_p) {
  const Subspace image_n = map_subspace(diagonal_coaction(uc.comodule()), n_p);
  return contains(tensor_subspace(n_p, Subspace::full(uc.dim_h())), image_n);
}

LinearMap adjoint_coaction(const HopfAlgebraData& h) {
  const std::size_t d = h.dim();
  const LinearMap delta2 = compose(tensor_map(h.comult(), id(d)), h.comult());
  const LinearMap s_then_mult = compose(h.algebra().mult(), tensor_map(h.antipode(), id(d)));
  return compose(tensor_map(id(d), s_then_mult), swap_middle(delta2, 1, d, d, d));
}

bool is_right_ideal(const HopfAlgebraData& h, const Subspace& v) {
  const AlgebraData& alg = h.algebra();
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (!member(alg.product(v.basis_vector(i), unit_vector(alg.dim(), j)), v)) return false;
  return true;
}

bool adr_invariant_right_ideal(const HopfAlgebraData& h, const Subspace& v) {
  if (!contains(augmentation_ideal(h), v)) throw HypothesisViolation("V is not contained in H⁺");
  if (!is_right_ideal(h, v)) return false;
  return contains(tensor_subspace(v, Subspace::full(h.dim())), map_subspace(adjoint_coaction(h), v));
}

// ------------------------------------------------------------ pair family

namespace {

std::string describe_vector(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_scalar(v[i]);
  return s + "]";
}

// Nonzero vectors with coefficients in {-1,0,1} on `rows`, first nonzero
// coefficient +1 so that each line is visited once.
std::vector<Vector> sign_combinations(const Subspace& s) {
  std::vector<Vector> out;
  const std::size_t k = s.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<int> c(k);
    std::size_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<int>(rest % 3) - 1;
      rest /= 3;
    }
    const auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    if (first == c.end() || *first != 1) continue;
    Vector v = zero_vector(s.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) v = v + scaled(s.basis_vector(i), Scalar(c[i]));
    out.push_back(std::move(v));
  }
  return out;
}

bool already_listed(const std::vector<PairSpec>& pairs, const Subspace& n, const Subspace& v) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const PairSpec& p) { return p.n_p == n && p.v == v; });
}

}  // namespace

std::vector<PairSpec> standard_pairs(const UniversalCalculus& uc) {
  const std::size_t pp = uc.dim_p() * uc.dim_p();
  const HopfAlgebraData& h = uc.comodule().hopf();
  std::vector<PairSpec> pairs;
  pairs.push_back({"zero", Subspace::zero(pp), Subspace::zero(uc.dim_h())});

  const GaloisContext& ctx = uc.context();
  if (is_galois(ctx)) {
    if (!already_listed(pairs, uc.omega1P(), uc.hplus())) pairs.push_back({"full", uc.omega1P(), uc.hplus()});

    std::vector<std::pair<std::string, Subspace>> ideals;
    for (const Vector& gen : sign_combinations(uc.hplus())) {
      Subspace v = Subspace::span(uc.dim_h(), std::vector<Vector>{gen});
      if (is_right_ideal(h, v)) ideals.emplace_back("ideal" + describe_vector(gen), std::move(v));
    }
    if (is_right_ideal(h, uc.hplus())) ideals.emplace_back("ideal:hplus", uc.hplus());

    for (const auto& [label, v] : ideals) {
      const Subspace pre = uc.from_omega(preimage(uc.can_bar(), uc.p_tensor(v)));
      const Subspace n = subbimodule_closure(uc, pre);
      if (!compat_check(uc, n, v, CompatMode::equality)) continue;
      if (!already_listed(pairs, n, v)) pairs.push_back({label, n, v});
    }
  }

  if (can_surjective(ctx) && !uc.hplus().is_zero()) {
    std::vector<std::pair<std::string, Vector>> candidates;
    for (std::size_t i = 0; i < uc.dim_p(); ++i) candidates.emplace_back("strict:d(e" + std::to_string(i) + ")", uc.differential(i));
    for (std::size_t k = 0; k < uc.omega_dim(); ++k)
      candidates.emplace_back("strict:omega" + std::to_string(k), uc.omega1P().basis_vector(k));

    bool found = false;
    for (const auto& [label, g] : candidates) {
      if (is_zero(g)) continue;
      const Subspace n = subbimodule_closure(uc, std::vector<Vector>{g});
      if (rank(compose(uc.can_bar(), uc.to_omega(n).inclusion())) < uc.p_hplus_dim()) {
        pairs.push_back({label, n, uc.hplus()});
        found = true;
        break;
      }
    }
    if (!found) pairs.push_back({"strict:zero", Subspace::zero(pp), uc.hplus()});
  }
  return pairs;
}

}  // namespace qb
