#pragma once

#include <cstddef>
#include <vector>

#include "qbundle/algebra.hpp"

namespace qb {

/// table[a][b] = index of the product a·b. Element 0 must be the identity.
using CayleyTable = std::vector<std::vector<std::size_t>>;

CayleyTable cyclic_group(std::size_t n);
/// S_3 as permutations of {0,1,2}, identity first.
CayleyTable symmetric_group_s3();
CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h);

/// The one-dimensional algebra Q.
AlgebraData scalars();
/// Q[x]/(x^n) on the monomial basis.
AlgebraData truncated_polynomial(std::size_t n);
/// Q[t]/(f) on the monomial basis 1, t, ..., t^{n-1}. `monic` lists the
/// coefficients of f from the constant term upwards; the leading one is 1.
AlgebraData polynomial_quotient(const Vector& monic);

/// kG: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfAlgebraData group_algebra(const CayleyTable& g);
/// Functions on G on the idempotent basis δ_g: Δδ_g = Σ_{ab=g} δ_a⊗δ_b.
HopfAlgebraData dual_group_hopf(const CayleyTable& g);
/// Sweedler's four-dimensional Hopf algebra on {1, g, x, gx}.
HopfAlgebraData sweedler_h4();

/// ρ(e_i) = e_i ⊗ g^{deg i} over group_algebra(Z_n), for a homogeneous
/// basis of `algebra`.
ComoduleAlgebraData graded_comodule(const AlgebraData& algebra, const std::vector<std::size_t>& degrees,
                                    std::size_t n);
/// ρ(p) = p ⊗ 1.
ComoduleAlgebraData trivial_coaction(const AlgebraData& algebra, const HopfAlgebraData& hopf);
/// P = H with ρ = Δ.
ComoduleAlgebraData regular_comodule(const HopfAlgebraData& hopf);
/// P = Q[t]/(f) coacted on by functions on the automorphism group generated
/// by `automorphisms` (each the image of t, as coefficients in the monomial
/// basis): ρ(e) = Σ_σ σ(e) ⊗ δ_σ.
ComoduleAlgebraData field_extension_comodule(const Vector& monic, const std::vector<Vector>& automorphisms);

}  // namespace qb
