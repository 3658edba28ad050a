#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbundle/builders.hpp"
#include "qbundle/errors.hpp"
#include "qbundle/galois.hpp"
#include "qbundle/zoo.hpp"

using namespace qb;

namespace {

Vector vec(std::vector<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LinearMap perturbed(const LinearMap& f, std::size_t r, std::size_t c) {
  Matrix m = f.matrix();
  m(r, c) += 1;
  return LinearMap(m);
}

}  // namespace

TEST_CASE("every zoo entry passes all checkers") {
  for (const ZooEntry& e : zoo()) {
    CAPTURE(e.name);
    ComoduleAlgebraData p = e.build();
    CHECK(check_hopf(p.hopf()).ok());
    CHECK(check_algebra(p.algebra()).ok());
    CHECK(check_comodule_algebra(p).ok());
  }
}

TEST_CASE("group algebras and their duals pass check_hopf") {
  for (const CayleyTable& g : {cyclic_group(2), cyclic_group(3), symmetric_group_s3(),
                               direct_product(cyclic_group(2), cyclic_group(2))}) {
    CHECK(check_hopf(group_algebra(g)).ok());
    CHECK(check_hopf(dual_group_hopf(g)).ok());
  }
}

TEST_CASE("invalid Cayley tables are rejected") {
  CHECK_THROWS(group_algebra({{0, 1}, {1, 1}}));
  CHECK_THROWS(group_algebra({{1, 0}, {0, 1}}));
}

TEST_CASE("Sweedler algebra structure") {
  HopfAlgebraData h = sweedler_h4();
  // basis index a + 2b for g^a x^b: 1, g, x, gx
  const Vector one = vec({1, 0, 0, 0}), g = vec({0, 1, 0, 0}), x = vec({0, 0, 1, 0}), gx = vec({0, 0, 0, 1});
  const AlgebraData& a = h.algebra();
  CHECK(a.product(g, g) == one);
  CHECK(is_zero(a.product(x, x)));
  CHECK(a.product(x, g) == scaled(gx, -1));
  CHECK(h.comult()(x) == kron(x, one) + kron(g, x));
  CHECK(h.comult()(g) == kron(g, g));
  CHECK(h.antipode()(x) == scaled(gx, -1));
  CHECK(h.antipode()(g) == g);
  CHECK(augmentation_ideal(h).dim() == 3);
}

TEST_CASE("augmentation ideals") {
  Subspace kz2 = augmentation_ideal(group_algebra(cyclic_group(2)));
  CHECK(kz2 == Subspace::span(2, std::vector<Vector>{vec({-1, 1})}));
  CHECK(augmentation_ideal(group_algebra(cyclic_group(1))).is_zero());
  CHECK(augmentation_ideal(dual_group_hopf(symmetric_group_s3())).dim() == 5);
}

TEST_CASE("group algebra and function algebra are dual") {
  // With the pairing <δ_a, b> = [a = b] the Gram matrix is the identity, so
  // comultiplication of one side is the transpose of multiplication of the other.
  for (const CayleyTable& t : {cyclic_group(2), cyclic_group(3)}) {
    HopfAlgebraData kg = group_algebra(t), fg = dual_group_hopf(t);
    CHECK(fg.comult().matrix() == kg.algebra().mult().matrix().transpose());
    CHECK(kg.comult().matrix() == fg.algebra().mult().matrix().transpose());
    CHECK(fg.counit().matrix() == Matrix::column(kg.algebra().unit()).transpose());
    CHECK(kg.counit().matrix() == Matrix::column(fg.algebra().unit()).transpose());
  }
}

TEST_CASE("perturbed structure constants name the violated axiom") {
  HopfAlgebraData h = group_algebra(cyclic_group(2));
  HopfAlgebraData bad_s(h.algebra(), h.comult(), h.counit(), perturbed(h.antipode(), 0, 1));
  AxiomReport r = check_hopf(bad_s);
  CHECK_FALSE(r.ok());
  CHECK((r.violates("antipode_left") || r.violates("antipode_right")));
  CHECK_FALSE(r.violates("associativity"));

  HopfAlgebraData bad_delta(h.algebra(), perturbed(h.comult(), 1, 1), h.counit(), h.antipode());
  CHECK(check_hopf(bad_delta).violates("coassociativity"));

  ComoduleAlgebraData p = regular_comodule(h);
  ComoduleAlgebraData bad_rho(p.hopf(), p.algebra(), perturbed(p.coaction(), 1, 1));
  AxiomReport rr = check_comodule_algebra(bad_rho);
  CHECK_FALSE(rr.ok());
  CHECK(rr.violates("coaction_counit"));
  REQUIRE_FALSE(rr.violations.empty());
  CHECK_FALSE(rr.violations.front().witness.empty());

  AlgebraData a = truncated_polynomial(2);
  AlgebraData bad_mult(perturbed(a.mult(), 1, 2), a.unit());
  CHECK(check_algebra(bad_mult).violates("unit_right"));
}

TEST_CASE("builders reject data that fails its checker") {
  // x has degree 1 but x^2 = 1 is degree 0 only mod 2.
  CHECK_THROWS_AS(graded_comodule(polynomial_quotient(vec({-1, 0, 1})), {0, 1}, 3), InvalidStructure);
  // t -> 2t is not an automorphism of Q[t]/(t^2 - 2).
  CHECK_THROWS_AS(field_extension_comodule(vec({-2, 0, 1}), {vec({0, 2})}), InvalidStructure);
}

TEST_CASE("graded coinvariants are the degree zero part") {
  ComoduleAlgebraData p = graded_comodule(truncated_polynomial(3), {0, 1, 2}, 3);
  CHECK(coinvariants(p) == Subspace::span(3, std::vector<Vector>{vec({1, 0, 0})}));
  ComoduleAlgebraData q = graded_comodule(truncated_polynomial(4), {0, 1, 0, 1}, 2);
  CHECK(coinvariants(q) == Subspace::span(4, std::vector<Vector>{vec({1, 0, 0, 0}), vec({0, 0, 1, 0})}));
}

TEST_CASE("field extension comodule closes the automorphism group") {
  ComoduleAlgebraData p = field_extension_comodule(vec({1, 0, -10, 0, 1}), {vec({0, -1, 0, 0}), vec({0, 10, 0, -1})});
  CHECK(p.dim_h() == 4);
  CHECK(check_comodule_algebra(p).ok());
}

TEST_CASE("tensor product multiplication matches (m⊗m)∘(id⊗swap⊗id)") {
  AlgebraData a = truncated_polynomial(3);
  AlgebraData b = sweedler_h4().algebra();
  const std::size_t da = a.dim(), db = b.dim();
  LinearMap shuffle = tensor_map(tensor_map(LinearMap::identity(da), swap_map(db, da)), LinearMap::identity(db));
  CHECK(tensor_algebra_mult(a, b) == compose(tensor_map(a.mult(), b.mult()), shuffle));
}
