#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qbundle/galois.hpp"

namespace qb {

/// Universal first-order calculus Ω¹P = Ker m together with the restricted
/// canonical map. Three coordinate systems are in play:
///   - P⊗P ambient coordinates (omega1P, omega1B_span, N_P inputs);
///   - Ω¹P coordinates, the RREF basis of omega1P (domain of can_bar);
///   - P⊗H⁺ coordinates, basis e_i⊗h⁺_j at index i*dim(H⁺)+j with h⁺_j the
///     RREF basis of H⁺ (codomain of can_bar).
class UniversalCalculus {
 public:
  explicit UniversalCalculus(GaloisContext ctx);

  const GaloisContext& context() const { return ctx_; }
  const ComoduleAlgebraData& comodule() const { return ctx_.comodule(); }
  std::size_t dim_p() const { return ctx_.comodule().dim_p(); }
  std::size_t dim_h() const { return ctx_.comodule().dim_h(); }

  const Subspace& hplus() const { return hplus_; }
  const Subspace& omega1P() const { return omega1P_; }
  const Subspace& omega1B_span() const { return omega1B_; }
  /// P(Ω¹B)P in Ω¹P coordinates.
  const Subspace& omega1B_coords() const { return omega1B_coords_; }
  /// P⊗H⁺ inside P⊗H.
  const Subspace& p_hplus() const { return p_hplus_; }
  /// Ω¹P -> P⊗H⁺.
  const LinearMap& can_bar() const { return can_bar_; }

  std::size_t omega_dim() const { return omega1P_.dim(); }
  std::size_t p_hplus_dim() const { return p_hplus_.dim(); }

  /// d(e_i) = 1⊗e_i - e_i⊗1 in P⊗P.
  Vector differential(std::size_t i) const;
  /// x ↦ e_i·x and x ↦ x·e_i on P⊗P.
  const LinearMap& left_action(std::size_t i) const { return left_.at(i); }
  const LinearMap& right_action(std::size_t i) const { return right_.at(i); }

  /// A subspace of Ω¹P ⊆ P⊗P re-expressed in Ω¹P coordinates.
  Subspace to_omega(const Subspace& in_pp) const;
  Subspace from_omega(const Subspace& coords) const;
  /// A subspace of H⁺ ⊆ H in H⁺ coordinates.
  Subspace to_hplus(const Subspace& in_h) const;
  /// P⊗V in P⊗H⁺ coordinates, for V ⊆ H⁺ given inside H.
  Subspace p_tensor(const Subspace& v_in_h) const;

 private:
  GaloisContext ctx_;
  Subspace hplus_;
  Subspace omega1P_;
  Subspace omega1B_;
  Subspace omega1B_coords_;
  Subspace p_hplus_;
  LinearMap can_bar_;
  std::vector<LinearMap> left_;
  std::vector<LinearMap> right_;
};

std::shared_ptr<const UniversalCalculus> universal_calculus(const GaloisContext& ctx);

/// 0 -> P(Ω¹B)P -> Ω¹P -> P⊗H⁺ -> 0 is exact.
bool sequence_e_exact(const UniversalCalculus& uc);

struct Prop2Report {
  bool galois = false;
  bool sequence_exact = false;
  std::size_t can_rank = 0;
  std::size_t balanced_dim = 0;
  std::size_t coinvariants_dim = 0;
  std::size_t omega1P_dim = 0;
  std::size_t omega1B_dim = 0;
  std::size_t ker_can_bar_dim = 0;
  std::size_t image_can_bar_dim = 0;
  std::size_t p_hplus_dim = 0;
  bool agree() const { return galois == sequence_exact; }
};

Prop2Report prop2_equivalence(const GaloisContext& ctx);

/// Smallest P-subbimodule of P⊗P containing `generators`. Generators must
/// lie in Ω¹P.
Subspace subbimodule_closure(const UniversalCalculus& uc, const std::vector<Vector>& generators);
Subspace subbimodule_closure(const UniversalCalculus& uc, const Subspace& generators);
bool is_subbimodule(const UniversalCalculus& uc, const Subspace& n_p);

enum class CompatMode { equality, inclusion };

/// can̄(N_P) = P⊗V (equality) or ⊆ P⊗V (inclusion). N_P ⊆ Ω¹P is given in
/// P⊗P coordinates, V ⊆ H⁺ in H coordinates.
bool compat_check(const UniversalCalculus& uc, const Subspace& n_p, const Subspace& v, CompatMode mode);

/// A quotient calculus Ω¹(P) = Ω¹P/N_P paired with V ⊆ H⁺, and the induced
/// map χ : Ω¹(P) -> P⊗(H⁺/V).
class CalculusPair {
 public:
  const UniversalCalculus& uc() const { return *uc_; }
  const Subspace& n_p() const { return n_p_; }
  const Subspace& n_p_coords() const { return n_p_coords_; }
  const Subspace& v() const { return v_; }
  const Subspace& v_coords() const { return v_coords_; }
  /// P⊗V in P⊗H⁺ coordinates.
  const Subspace& p_v() const { return p_v_; }
  const QuotientSpace& omega1_quotient() const { return omega1_quotient_; }
  const QuotientSpace& hplus_quotient() const { return hplus_quotient_; }
  /// (P⊗H⁺)/(P⊗V); its coordinates are those of P⊗(H⁺/V).
  const QuotientSpace& codomain_quotient() const { return codomain_quotient_; }
  const LinearMap& chi() const { return chi_; }
  /// can̄ restricted to N_P -> P⊗V, in N_P and P⊗V coordinates.
  const LinearMap& chi_bar() const { return chi_bar_; }
  /// π_P(P(Ω¹B)P) inside Ω¹(P).
  const Subspace& horizontal_image() const { return horizontal_; }

  friend CalculusPair build_chi(std::shared_ptr<const UniversalCalculus> uc, const Subspace& n_p,
                                const Subspace& v);

 private:
  CalculusPair() = default;

  std::shared_ptr<const UniversalCalculus> uc_;
  Subspace n_p_, n_p_coords_, v_, v_coords_, p_v_;
  QuotientSpace omega1_quotient_, hplus_quotient_, codomain_quotient_;
  LinearMap chi_, chi_bar_;
  Subspace horizontal_;
};

/// Throws NotSubbimodule, HypothesisViolation (V ⊄ H⁺ or N_P ⊄ Ω¹P), or
/// CompatibilityViolation (can̄(N_P) ⊄ P⊗V).
CalculusPair build_chi(std::shared_ptr<const UniversalCalculus> uc, const Subspace& n_p, const Subspace& v);

bool compat_check(const CalculusPair& cp, CompatMode mode);
bool sequence_e3_exact(const CalculusPair& cp);
/// N_P ∩ Ker can̄ ⊆ P(Ω¹B)P.
bool condition_np_ker(const CalculusPair& cp);
/// Ker χ̄ pushed into Ω¹P coordinates.
Subspace kernel_chi_bar(const CalculusPair& cp);

struct OracleReport {
  bool side1 = false;
  bool side2 = false;
  bool galois = false;
  bool e3_exact = false;
  bool condition = false;
  bool compat_equality = false;
  bool compat_inclusion = false;
  bool p_v_in_image = false;  // P⊗V ⊆ can̄(N_P)
  std::size_t n_p_dim = 0;
  std::size_t v_dim = 0;
  std::size_t omega1_quotient_dim = 0;
  std::size_t ker_can_bar_dim = 0;
  std::size_t omega1B_dim = 0;
  std::size_t horizontal_dim = 0;
  std::size_t ker_chi_dim = 0;
  std::size_t coker_chi_dim = 0;
  std::size_t ker_chi_bar_dim = 0;
  std::size_t coker_chi_bar_dim = 0;
  std::size_t coker_can_bar_dim = 0;
  bool agree() const { return side1 == side2; }
};

/// Both sides of the equivalence for can̄(N_P) = P⊗V. Throws
/// HypothesisViolation if equality compatibility fails.
OracleReport prop3_oracle(std::shared_ptr<const UniversalCalculus> uc, const Subspace& n_p, const Subspace& v);
/// Both sides for surjective can and can̄(N_P) ⊆ P⊗V. Throws
/// HypothesisViolation if can is not surjective or inclusion fails, and
/// InternalError if surjective can leaves a nonzero Coker can̄.
OracleReport prop4_oracle(std::shared_ptr<const UniversalCalculus> uc, const Subspace& n_p, const Subspace& v);

/// Δ_R(N_P) ⊆ N_P⊗H under the diagonal coaction on P⊗P.
bool right_covariant(const UniversalCalculus& uc, const Subspace& n_p);
/// p⊗p' ↦ p₀⊗p'₀⊗p₁p'₁.
LinearMap diagonal_coaction(const ComoduleAlgebraData& p);

/// ad_R(h) = h₍₂₎ ⊗ S(h₍₁₎)h₍₃₎ : H -> H⊗H.
LinearMap adjoint_coaction(const HopfAlgebraData& h);
bool is_right_ideal(const HopfAlgebraData& h, const Subspace& v);
/// V is a right ideal with ad_R(V) ⊆ V⊗H. Requires V ⊆ H⁺.
bool adr_invariant_right_ideal(const HopfAlgebraData& h, const Subspace& v);

/// Named (N_P, V) input for the oracles.
struct PairSpec {
  std::string label;
  Subspace n_p;  // P⊗P coordinates
  Subspace v;    // H coordinates
};

/// The standard family run against every instance:
///   zero      N_P = 0, V = 0;
///   full      N_P = Ω¹P, V = H⁺ (Galois instances);
///   ideal:... N_P = closure(can̄⁻¹(P⊗V)) for each right ideal V ⊆ H⁺ met by
///             a search over 1-dim spans with coefficients in {-1,0,1} on the
///             H⁺ basis, plus V = H⁺ (Galois instances, kept when the
///             equality compatibility holds);
///   strict    V = H⁺ with can̄(N_P) ⊊ P⊗H⁺ (surjective can only).
std::vector<PairSpec> standard_pairs(const UniversalCalculus& uc);

}  // namespace qb
