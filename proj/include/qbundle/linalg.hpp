#pragma once

#include <cstddef>
#include <vector>

#include "qbundle/matrix.hpp"

namespace qb {

/// A linear map between coordinate spaces, acting on columns: the matrix is
/// codomain_dim x domain_dim.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : matrix_(std::move(m)) {}
  LinearMap(std::size_t domain_dim, std::size_t codomain_dim, Matrix m);

  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
  static LinearMap zero(std::size_t domain_dim, std::size_t codomain_dim) {
    return LinearMap(Matrix(codomain_dim, domain_dim));
  }

  std::size_t domain_dim() const { return matrix_.cols(); }
  std::size_t codomain_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  Vector operator()(const Vector& v) const { return matrix_ * v; }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.matrix_ == b.matrix_; }

 private:
  Matrix matrix_;
};

/// outer ∘ inner.
LinearMap compose(const LinearMap& outer, const LinearMap& inner);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);

/// f ⊗ g on the lexicographic tensor basis: e_i ⊗ e_j has index i*dim(W)+j.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

/// The flip U⊗W -> W⊗U.
LinearMap swap_map(std::size_t dim_u, std::size_t dim_w);

/// (id_a ⊗ swap(b, c) ⊗ id_d) ∘ f, computed as a row permutation of f
/// without building the permutation matrix.
LinearMap swap_middle(const LinearMap& f, std::size_t a, std::size_t b, std::size_t c, std::size_t d);

std::size_t rank(const LinearMap& f);

/// Subspace of a coordinate space, held as an RREF basis. Equal subspaces
/// have identical basis matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient_dim, const Matrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// v with every pivot component cleared by subtracting basis rows. Zero
  /// iff v is a member.
  Vector reduce(const Vector& v) const;

  /// Coordinates of a member in the basis. Throws DimensionError if `v` is
  /// not in the subspace.
  Vector coordinates(const Vector& v) const;

  /// dim -> ambient, basis vectors as columns.
  LinearMap inclusion() const;
  /// ambient -> dim, reading the pivot entries. Left inverse of inclusion().
  LinearMap coordinate_map() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Echelon e);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// True iff inner ⊆ outer.
bool contains(const Subspace& outer, const Subspace& inner);
bool member(const Vector& v, const Subspace& s);
/// {v | f(v) ∈ s}.
Subspace preimage(const LinearMap& f, const Subspace& s);
/// f(s).
Subspace map_subspace(const LinearMap& f, const Subspace& s);
/// span{a_i ⊗ b_j} in the lexicographic tensor basis.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

/// ambient / killed with coordinates on the non-pivot positions of killed.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient_dim, Subspace killed);

  std::size_t ambient_dim() const { return ambient_; }
  const Subspace& killed() const { return killed_; }
  std::size_t quotient_dim() const { return complement_.size(); }
  /// Ambient coordinates spanning the chosen complement, increasing.
  const std::vector<std::size_t>& complement() const { return complement_; }
  const LinearMap& projection() const { return projection_; }
  const LinearMap& section() const { return section_; }

 private:
  std::size_t ambient_ = 0;
  Subspace killed_;
  std::vector<std::size_t> complement_;
  LinearMap projection_;
  LinearMap section_;
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& killed);

/// The unique g with g ∘ dom_q.projection = cod_q.projection ∘ f. Throws
/// WellDefinednessError unless f(dom_q.killed) ⊆ cod_q.killed.
LinearMap induced_map(const LinearMap& f, const QuotientSpace& dom_q, const QuotientSpace& cod_q);

/// Cokernel of f as a quotient of its codomain.
inline QuotientSpace cokernel(const LinearMap& f) { return quotient(f.codomain_dim(), image(f)); }

}  // namespace qb
