#include "qbundle/linalg.hpp"

#include <utility>

#include "qbundle/errors.hpp"

namespace qb {

LinearMap::LinearMap(std::size_t domain_dim, std::size_t codomain_dim, Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != codomain_dim || matrix_.cols() != domain_dim) {
    throw DimensionError("linear map " + std::to_string(domain_dim) + " -> " + std::to_string(codomain_dim) +
                         " given a " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                         " matrix");
  }
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.domain_dim() != inner.codomain_dim()) {
    throw DimensionError("compose: inner codomain " + std::to_string(inner.codomain_dim()) +
                         " != outer domain " + std::to_string(outer.domain_dim()));
  }
  return LinearMap(outer.matrix() * inner.matrix());
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix() + b.matrix()); }
LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix() - b.matrix()); }

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) { return LinearMap(kron(f.matrix(), g.matrix())); }

LinearMap swap_map(std::size_t dim_u, std::size_t dim_w) {
  Matrix m(dim_u * dim_w, dim_u * dim_w);
  for (std::size_t i = 0; i < dim_u; ++i)
    for (std::size_t j = 0; j < dim_w; ++j) m(j * dim_u + i, i * dim_w + j) = 1;
  return LinearMap(std::move(m));
}

LinearMap swap_middle(const LinearMap& f, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (f.codomain_dim() != a * b * c * d) throw DimensionError("swap_middle: codomain is not a⊗b⊗c⊗d");
  const Matrix& m = f.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const std::size_t from = ((i * b + j) * c + k) * d + l;
          const std::size_t to = ((i * c + k) * b + j) * d + l;
          for (std::size_t col = 0; col < m.cols(); ++col) out(to, col) = m(from, col);
        }
  return LinearMap(std::move(out));
}

std::size_t rank(const LinearMap& f) { return rank(f.matrix()); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, Echelon e)
    : ambient_(ambient), basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::span(std::size_t ambient_dim, const Matrix& generators) {
  if (generators.cols() != ambient_dim) {
    throw DimensionError("span: generators have length " + std::to_string(generators.cols()) +
                         ", ambient dimension is " + std::to_string(ambient_dim));
  }
  return Subspace(ambient_dim, echelon(generators));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return span(ambient_dim, Matrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Echelon{Matrix(0, ambient_dim), {}}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, Echelon{Matrix::identity(ambient_dim), std::move(pivots)});
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("reduce: vector length mismatch");
  Vector out = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Scalar c = out[pivots_[k]];
    if (qb::is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!qb::is_zero(basis_(k, j))) out[j] -= c * basis_(k, j);
  }
  return out;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!qb::is_zero(reduce(v))) throw DimensionError("coordinates: vector is not in the subspace");
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

LinearMap Subspace::inclusion() const { return LinearMap(basis_.transpose()); }

LinearMap Subspace::coordinate_map() const {
  Matrix m(dim(), ambient_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) m(k, pivots_[k]) = 1;
  return LinearMap(std::move(m));
}

// --------------------------------------------------------------- operations

Subspace kernel(const LinearMap& f) {
  const Matrix& m = f.matrix();
  const std::size_t n = m.cols();
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace image(const LinearMap& f) { return Subspace::span(f.codomain_dim(), f.matrix().transpose()); }

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                         std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  return map_subspace(a.inclusion(), preimage(a.inclusion(), b));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::span(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner, "contains");
  if (inner.dim() > outer.dim()) return false;
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!is_zero(outer.reduce(inner.basis_vector(i)))) return false;
  return true;
}

bool member(const Vector& v, const Subspace& s) { return is_zero(s.reduce(v)); }

Subspace preimage(const LinearMap& f, const Subspace& s) {
  if (f.codomain_dim() != s.ambient_dim()) throw DimensionError("preimage: codomain does not match subspace");
  return kernel(compose(quotient(s.ambient_dim(), s).projection(), f));
}

Subspace map_subspace(const LinearMap& f, const Subspace& s) {
  if (f.domain_dim() != s.ambient_dim()) throw DimensionError("map_subspace: domain does not match subspace");
  return Subspace::span(f.codomain_dim(), s.basis() * f.matrix().transpose());
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  return Subspace::span(a.ambient_dim() * b.ambient_dim(), kron(a.basis(), b.basis()));
}

// ------------------------------------------------------------ QuotientSpace

QuotientSpace::QuotientSpace(std::size_t ambient_dim, Subspace killed)
    : ambient_(ambient_dim), killed_(std::move(killed)) {
  if (killed_.ambient_dim() != ambient_) {
    throw DimensionError("quotient: killed subspace lives in dimension " + std::to_string(killed_.ambient_dim()) +
                         ", ambient is " + std::to_string(ambient_));
  }
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : killed_.pivots()) is_pivot[p] = true;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) complement_.push_back(i);

  // projection(x) reads the complement entries of x reduced modulo killed.
  Matrix proj(complement_.size(), ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) {
    const Vector r = killed_.reduce(unit_vector(ambient_, i));
    for (std::size_t q = 0; q < complement_.size(); ++q) proj(q, i) = r[complement_[q]];
  }
  projection_ = LinearMap(std::move(proj));

  Matrix sec(ambient_, complement_.size());
  for (std::size_t q = 0; q < complement_.size(); ++q) sec(complement_[q], q) = 1;
  section_ = LinearMap(std::move(sec));
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& killed) { return QuotientSpace(ambient_dim, killed); }

LinearMap induced_map(const LinearMap& f, const QuotientSpace& dom_q, const QuotientSpace& cod_q) {
  if (f.domain_dim() != dom_q.ambient_dim() || f.codomain_dim() != cod_q.ambient_dim()) {
    throw DimensionError("induced_map: map " + std::to_string(f.domain_dim()) + " -> " +
                         std::to_string(f.codomain_dim()) + " does not match quotients of " +
                         std::to_string(dom_q.ambient_dim()) + " and " + std::to_string(cod_q.ambient_dim()));
  }
  if (!contains(cod_q.killed(), map_subspace(f, dom_q.killed()))) {
    throw WellDefinednessError("induced_map: f does not carry the killed subspace into the target's");
  }
  return compose(cod_q.projection(), compose(f, dom_q.section()));
}

}  // namespace qb
