#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/linalg.hpp"

namespace qb {

/// Finite-dimensional unital algebra given by structure constants.
/// mult is a dim x dim² matrix on the lexicographic basis of A⊗A.
class AlgebraData {
 public:
  AlgebraData() = default;
  AlgebraData(LinearMap mult, Vector unit, std::vector<std::string> basis_names = {});

  std::size_t dim() const { return unit_.size(); }
  const LinearMap& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Q -> A, 1 ↦ unit.
  LinearMap unit_map() const { return LinearMap(Matrix::column(unit_)); }
  /// a ↦ e_i a.
  LinearMap left_mult(std::size_t i) const;
  /// a ↦ a e_i.
  LinearMap right_mult(std::size_t i) const;
  Vector product(const Vector& a, const Vector& b) const { return mult_(kron(a, b)); }

 private:
  LinearMap mult_;
  Vector unit_;
  std::vector<std::string> names_;
};

class HopfAlgebraData {
 public:
  HopfAlgebraData() = default;
  HopfAlgebraData(AlgebraData algebra, LinearMap comult, LinearMap counit, LinearMap antipode);

  std::size_t dim() const { return algebra_.dim(); }
  const AlgebraData& algebra() const { return algebra_; }
  const LinearMap& comult() const { return comult_; }
  const LinearMap& counit() const { return counit_; }
  const LinearMap& antipode() const { return antipode_; }

 private:
  AlgebraData algebra_;
  LinearMap comult_;
  LinearMap counit_;
  LinearMap antipode_;
};

/// A right H-comodule algebra P with coaction P -> P⊗H.
class ComoduleAlgebraData {
 public:
  ComoduleAlgebraData() = default;
  ComoduleAlgebraData(HopfAlgebraData hopf, AlgebraData algebra, LinearMap coaction);

  const HopfAlgebraData& hopf() const { return hopf_; }
  const AlgebraData& algebra() const { return algebra_; }
  const LinearMap& coaction() const { return coaction_; }
  std::size_t dim_p() const { return algebra_.dim(); }
  std::size_t dim_h() const { return hopf_.dim(); }

 private:
  HopfAlgebraData hopf_;
  AlgebraData algebra_;
  LinearMap coaction_;
};

struct Violation {
  std::string axiom;
  /// Basis indices of the first domain tensor where the identity fails.
  std::vector<std::size_t> witness;
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(const std::string& axiom) const;
};

AxiomReport check_algebra(const AlgebraData& a);
AxiomReport check_hopf(const HopfAlgebraData& h);
/// Coaction axioms only; the algebra and Hopf axioms are checked separately.
AxiomReport check_comodule_algebra(const ComoduleAlgebraData& p);

/// Ker ε.
Subspace augmentation_ideal(const HopfAlgebraData& h);

/// Componentwise product on A⊗B as a map (A⊗B)⊗(A⊗B) -> A⊗B.
LinearMap tensor_algebra_mult(const AlgebraData& a, const AlgebraData& b);

/// The first column where two maps differ, decoded into basis indices of
/// the tensor factors of the domain. nullopt when equal.
std::optional<std::vector<std::size_t>> first_mismatch(const LinearMap& lhs, const LinearMap& rhs,
                                                       const std::vector<std::size_t>& factor_dims);

}  // namespace qb
