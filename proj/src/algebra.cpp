#include "qbundle/algebra.hpp"

#include <algorithm>

#include "qbundle/errors.hpp"

namespace qb {

namespace {

void require_shape(const LinearMap& f, std::size_t dom, std::size_t cod, const std::string& what) {
  if (f.domain_dim() != dom || f.codomain_dim() != cod) {
    throw DimensionError(what + " must be " + std::to_string(cod) + "x" + std::to_string(dom) + ", got " +
                         std::to_string(f.codomain_dim()) + "x" + std::to_string(f.domain_dim()));
  }
}

LinearMap id(std::size_t n) { return LinearMap::identity(n); }

}  // namespace

AlgebraData::AlgebraData(LinearMap mult, Vector unit, std::vector<std::string> basis_names)
    : mult_(std::move(mult)), unit_(std::move(unit)), names_(std::move(basis_names)) {
  const std::size_t d = unit_.size();
  require_shape(mult_, d * d, d, "multiplication");
  if (names_.empty()) {
    for (std::size_t i = 0; i < d; ++i) names_.push_back("e" + std::to_string(i));
  } else if (names_.size() != d) {
    throw DimensionError("algebra has " + std::to_string(d) + " basis elements but " +
                         std::to_string(names_.size()) + " names");
  }
}

LinearMap AlgebraData::left_mult(std::size_t i) const {
  return compose(mult_, tensor_map(LinearMap(Matrix::column(unit_vector(dim(), i))), id(dim())));
}

LinearMap AlgebraData::right_mult(std::size_t i) const {
  return compose(mult_, tensor_map(id(dim()), LinearMap(Matrix::column(unit_vector(dim(), i)))));
}

HopfAlgebraData::HopfAlgebraData(AlgebraData algebra, LinearMap comult, LinearMap counit, LinearMap antipode)
    : algebra_(std::move(algebra)), comult_(std::move(comult)), counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t d = algebra_.dim();
  require_shape(comult_, d, d * d, "comultiplication");
  require_shape(counit_, d, 1, "counit");
  require_shape(antipode_, d, d, "antipode");
}

ComoduleAlgebraData::ComoduleAlgebraData(HopfAlgebraData hopf, AlgebraData algebra, LinearMap coaction)
    : hopf_(std::move(hopf)), algebra_(std::move(algebra)), coaction_(std::move(coaction)) {
  require_shape(coaction_, algebra_.dim(), algebra_.dim() * hopf_.dim(), "coaction");
}

bool AxiomReport::violates(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

std::optional<std::vector<std::size_t>> first_mismatch(const LinearMap& lhs, const LinearMap& rhs,
                                                       const std::vector<std::size_t>& factor_dims) {
  const Matrix& a = lhs.matrix();
  const Matrix& b = rhs.matrix();
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InternalError("first_mismatch: shape mismatch");
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, c) == b(r, c)) continue;
      std::vector<std::size_t> witness(factor_dims.size());
      std::size_t rest = c;
      for (std::size_t k = factor_dims.size(); k-- > 0;) {
        witness[k] = rest % factor_dims[k];
        rest /= factor_dims[k];
      }
      return witness;
    }
  }
  return std::nullopt;
}

namespace {

void expect(AxiomReport& report, const std::string& axiom, const LinearMap& lhs, const LinearMap& rhs,
            const std::vector<std::size_t>& factor_dims) {
  if (auto w = first_mismatch(lhs, rhs, factor_dims)) report.violations.push_back({axiom, std::move(*w)});
}

}  // namespace

LinearMap tensor_algebra_mult(const AlgebraData& a, const AlgebraData& b) {
  // (a⊗b)⊗(a'⊗b') ↦ aa'⊗bb', entry by entry from the two multiplication tables
  const std::size_t da = a.dim(), db = b.dim();
  const Matrix& ma = a.mult().matrix();
  const Matrix& mb = b.mult().matrix();
  Matrix out(da * db, da * db * da * db);
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t i2 = 0; i2 < da; ++i2) {
        const Scalar& x = ma(k, i * da + i2);
        if (is_zero(x)) continue;
        for (std::size_t l = 0; l < db; ++l)
          for (std::size_t j = 0; j < db; ++j)
            for (std::size_t j2 = 0; j2 < db; ++j2) {
              const Scalar& y = mb(l, j * db + j2);
              if (is_zero(y)) continue;
              out(k * db + l, (i * db + j) * da * db + i2 * db + j2) = x * y;
            }
      }
  return LinearMap(std::move(out));
}

AxiomReport check_algebra(const AlgebraData& a) {
  AxiomReport report;
  const std::size_t d = a.dim();
  const LinearMap& m = a.mult();
  expect(report, "associativity", compose(m, tensor_map(m, id(d))), compose(m, tensor_map(id(d), m)), {d, d, d});
  expect(report, "unit_left", compose(m, tensor_map(a.unit_map(), id(d))), id(d), {d});
  expect(report, "unit_right", compose(m, tensor_map(id(d), a.unit_map())), id(d), {d});
  return report;
}

AxiomReport check_hopf(const HopfAlgebraData& h) {
  AxiomReport report = check_algebra(h.algebra());
  const std::size_t d = h.dim();
  const LinearMap& m = h.algebra().mult();
  const LinearMap& delta = h.comult();
  const LinearMap& eps = h.counit();
  const LinearMap& s = h.antipode();
  const LinearMap eta = h.algebra().unit_map();
  const LinearMap one = id(1);

  expect(report, "coassociativity", compose(tensor_map(delta, id(d)), delta), compose(tensor_map(id(d), delta), delta),
         {d});
  // Q⊗H and H⊗Q are identified with H by the lexicographic convention.
  expect(report, "counit_left", compose(tensor_map(eps, id(d)), delta), id(d), {d});
  expect(report, "counit_right", compose(tensor_map(id(d), eps), delta), id(d), {d});

  const LinearMap mult_hh = tensor_algebra_mult(h.algebra(), h.algebra());
  expect(report, "comult_multiplicative", compose(delta, m), compose(mult_hh, tensor_map(delta, delta)), {d, d});
  expect(report, "comult_unital", compose(delta, eta), tensor_map(eta, eta), {1});
  expect(report, "counit_multiplicative", compose(eps, m), tensor_map(eps, eps), {d, d});
  expect(report, "counit_unital", compose(eps, eta), one, {1});

  const LinearMap unit_counit = compose(eta, eps);
  expect(report, "antipode_left", compose(m, compose(tensor_map(s, id(d)), delta)), unit_counit, {d});
  expect(report, "antipode_right", compose(m, compose(tensor_map(id(d), s), delta)), unit_counit, {d});
  return report;
}

AxiomReport check_comodule_algebra(const ComoduleAlgebraData& p) {
  AxiomReport report;
  const std::size_t dp = p.dim_p();
  const std::size_t dh = p.dim_h();
  const LinearMap& rho = p.coaction();
  const HopfAlgebraData& h = p.hopf();

  expect(report, "coaction_coassociativity", compose(tensor_map(rho, id(dh)), rho),
         compose(tensor_map(id(dp), h.comult()), rho), {dp});
  expect(report, "coaction_counit", compose(tensor_map(id(dp), h.counit()), rho), id(dp), {dp});

  const LinearMap mult_ph = tensor_algebra_mult(p.algebra(), h.algebra());
  expect(report, "coaction_multiplicative", compose(rho, p.algebra().mult()), compose(mult_ph, tensor_map(rho, rho)),
         {dp, dp});
  expect(report, "coaction_unital", compose(rho, p.algebra().unit_map()),
         tensor_map(p.algebra().unit_map(), h.algebra().unit_map()), {1});
  return report;
}

Subspace augmentation_ideal(const HopfAlgebraData& h) { return kernel(h.counit()); }

}  // namespace qb
