#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbundle/builders.hpp"
#include "qbundle/galois.hpp"
#include "support.hpp"

using namespace qb;

namespace {

GaloisContext ctx_of(const std::string& name) { return canonical_map(find_zoo(name)->build()); }

}  // namespace

TEST_CASE("lifted canonical map matches the elementwise formula") {
  for (const ZooEntry& e : zoo()) {
    CAPTURE(e.name);
    ComoduleAlgebraData p = e.build();
    CHECK(lifted_canonical_map(p).matrix() == qbtest::naive_lifted_can(p));
  }
}

TEST_CASE("regular comodules are Galois with B = Q1") {
  for (const char* name : {"kz2_regular", "kz3_regular", "ks3_regular", "dual_z2_regular", "dual_z3_regular",
                           "dual_s3_regular", "sweedler_h4", "unit_trivial"}) {
    CAPTURE(name);
    GaloisContext ctx = ctx_of(name);
    const ComoduleAlgebraData& p = ctx.comodule();
    CHECK(ctx.coinvariants() == Subspace::span(p.dim_p(), std::vector<Vector>{p.algebra().unit()}));
    CHECK(is_galois(ctx));
    CHECK(qbtest::bareiss_rank(ctx.can().matrix()) == p.dim_p() * p.dim_h());
  }
}

TEST_CASE("field extensions are Galois") {
  for (const char* name : {"gal_sqrt2", "gal_cyclotomic3", "gal_biquadratic"}) {
    CAPTURE(name);
    GaloisContext ctx = ctx_of(name);
    CHECK(ctx.coinvariants().dim() == 1);
    CHECK(ctx.balanced().quotient_dim() == ctx.comodule().dim_p() * ctx.comodule().dim_p());
    CHECK(is_galois(ctx));
  }
}

TEST_CASE("Q[x]/(x^2) graded over kZ2 has can of rank 3 out of 4") {
  GaloisContext ctx = ctx_of("z2_graded_dual_numbers");
  CHECK(ctx.coinvariants().dim() == 1);
  CHECK(ctx.balanced().quotient_dim() == 4);
  CHECK(ctx.can().codomain_dim() == 4);
  CHECK(qbtest::bareiss_rank(ctx.can().matrix()) == 3);
  CHECK_FALSE(is_galois(ctx));
  CHECK_FALSE(can_surjective(ctx));
}

TEST_CASE("strongly graded algebra over kZ2 is Galois") {
  GaloisContext ctx = ctx_of("z2_graded_split");
  CHECK(is_galois(ctx));
}

TEST_CASE("trivial coactions are not Galois once dim H >= 2") {
  for (const char* name : {"trivial_2", "trivial_q_kz2"}) {
    CAPTURE(name);
    GaloisContext ctx = ctx_of(name);
    CHECK(ctx.coinvariants().is_full());
    // P⊗_P P ≅ P
    CHECK(ctx.balanced().quotient_dim() == ctx.comodule().dim_p());
    CHECK_FALSE(is_galois(ctx));
  }
  GaloisContext sweedler_on_q = canonical_map(trivial_coaction(scalars(), sweedler_h4()));
  CHECK(qbtest::bareiss_rank(sweedler_on_q.can().matrix()) == 1);
}

TEST_CASE("balanced tensor kills pb⊗p' - p⊗bp'") {
  GaloisContext ctx = ctx_of("trivial_2");
  const ComoduleAlgebraData& p = ctx.comodule();
  const std::size_t n = p.dim_p();
  const Vector x = unit_vector(n, 1), one = unit_vector(n, 0);
  Vector rel = kron(p.algebra().product(one, x), one) - kron(one, p.algebra().product(x, one));
  CHECK(is_zero(ctx.balanced().projection()(rel)));
  CHECK(ctx.balanced().killed().dim() == n * n - n);
}
