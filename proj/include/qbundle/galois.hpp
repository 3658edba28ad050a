#pragma once

#include "qbundle/algebra.hpp"

namespace qb {

/// The canonical map of a comodule algebra together with the data it is
/// built from. B is always computed from the coaction, never supplied.
class GaloisContext {
 public:
  explicit GaloisContext(ComoduleAlgebraData p);

  const ComoduleAlgebraData& comodule() const { return p_; }
  /// B = P^{co H} ⊆ P.
  const Subspace& coinvariants() const { return coinvariants_; }
  /// P⊗_B P as a quotient of P⊗P.
  const QuotientSpace& balanced() const { return balanced_; }
  /// (m⊗id)∘(id⊗Δ_R) : P⊗P -> P⊗H, before balancing.
  const LinearMap& lifted_can() const { return lifted_; }
  /// can : P⊗_B P -> P⊗H.
  const LinearMap& can() const { return can_; }

 private:
  ComoduleAlgebraData p_;
  Subspace coinvariants_;
  QuotientSpace balanced_;
  LinearMap lifted_;
  LinearMap can_;
};

/// Ker(Δ_R - id⊗1_H). Throws InternalError if the result is not a unital
/// subalgebra.
Subspace coinvariants(const ComoduleAlgebraData& p);

/// P⊗P / span{pb⊗p' - p⊗bp'} over basis p, p' of P and basis b of B.
QuotientSpace balanced_tensor(const ComoduleAlgebraData& p, const Subspace& b);

/// (m⊗id)∘(id⊗Δ_R) on P⊗P.
LinearMap lifted_canonical_map(const ComoduleAlgebraData& p);

GaloisContext canonical_map(const ComoduleAlgebraData& p);

/// can is bijective.
bool is_galois(const GaloisContext& ctx);
bool can_surjective(const GaloisContext& ctx);

}  // namespace qb
