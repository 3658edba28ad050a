#include "qbundle/galois.hpp"

#include "qbundle/errors.hpp"

namespace qb {

Subspace coinvariants(const ComoduleAlgebraData& p) {
  const AlgebraData& alg = p.algebra();
  const LinearMap times_one = tensor_map(LinearMap::identity(p.dim_p()), p.hopf().algebra().unit_map());
  Subspace b = kernel(p.coaction() - times_one);

  if (!member(alg.unit(), b)) throw InternalError("coinvariants do not contain the unit");
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!member(alg.product(b.basis_vector(i), b.basis_vector(j)), b))
        throw InternalError("coinvariants are not closed under multiplication");
  return b;
}

QuotientSpace balanced_tensor(const ComoduleAlgebraData& p, const Subspace& b) {
  const AlgebraData& alg = p.algebra();
  const std::size_t n = alg.dim();
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Vector bk = b.basis_vector(k);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector pb = alg.product(unit_vector(n, i), bk);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector bp = alg.product(bk, unit_vector(n, j));
        gens.push_back(kron(pb, unit_vector(n, j)) - kron(unit_vector(n, i), bp));
      }
    }
  }
  return quotient(n * n, Subspace::span(n * n, gens));
}

LinearMap lifted_canonical_map(const ComoduleAlgebraData& p) {
  const LinearMap id_h = LinearMap::identity(p.dim_h());
  const LinearMap id_p = LinearMap::identity(p.dim_p());
  // p⊗p' -> p⊗p'₀⊗p'₁ -> pp'₀⊗p'₁
  return compose(tensor_map(p.algebra().mult(), id_h), tensor_map(id_p, p.coaction()));
}

GaloisContext::GaloisContext(ComoduleAlgebraData p)
    : p_(std::move(p)),
      coinvariants_(qb::coinvariants(p_)),
      balanced_(balanced_tensor(p_, coinvariants_)),
      lifted_(lifted_canonical_map(p_)) {
  const std::size_t target = p_.dim_p() * p_.dim_h();
  try {
    can_ = induced_map(lifted_, balanced_, quotient(target, Subspace::zero(target)));
  } catch (const WellDefinednessError&) {
    throw InternalError("canonical map does not descend to P⊗_B P");
  }
}

GaloisContext canonical_map(const ComoduleAlgebraData& p) { return GaloisContext(p); }

bool is_galois(const GaloisContext& ctx) {
  const LinearMap& can = ctx.can();
  return can.domain_dim() == can.codomain_dim() && rank(can) == can.domain_dim();
}

bool can_surjective(const GaloisContext& ctx) { return rank(ctx.can()) == ctx.can().codomain_dim(); }

}  // namespace qb
