#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glevi/derivation_family.hpp"
#include "glevi/subspace.hpp"

namespace glevi {

/// One structure constant: [e_i, e_j] has coefficient c on e_k.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational c;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only pairs i < j are stored; antisymmetry is implied. The Jacobi identity
/// is not checked on construction, see validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Terms with i > j are flipped with a sign change; repeated (i, j, k) are
  /// summed. Throws ErrorKind::NotALieAlgebra for a nonzero [e_i, e_i].
  LieAlgebra(std::vector<std::string> names, const std::vector<StructureConstant>& terms);

  /// Builds the algebra whose basis brackets [e_i, e_j] (i < j) are given in
  /// coordinates by `bracket_of_basis`.
  static LieAlgebra from_basis_brackets(std::vector<std::string> names,
                                        const std::function<Vector(std::size_t, std::size_t)>& bracket_of_basis);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Nonzero constants with i < j, sorted by (i, j, k).
  const std::vector<StructureConstant>& structure() const noexcept { return structure_; }

  /// ad(e_i) as a matrix: column j holds the coordinates of [e_i, e_j].
  const Matrix& ad_basis(std::size_t i) const { return ad_.at(i); }
  Vector basis_bracket(std::size_t i, std::size_t j) const { return ad_.at(i).column(j); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.ad_ == b.ad_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<StructureConstant> structure_;
  std::vector<Matrix> ad_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  /// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  Vector value;
};

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& g);
/// Throws ErrorKind::NotALieAlgebra naming the first violating triple.
void validate(const LieAlgebra& g);

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);
Matrix ad_matrix(const LieAlgebra& g, const Vector& x);

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieAlgebra& g, const Subspace& a);
bool is_ideal(const LieAlgebra& g, const Subspace& a);

/// a, [a,a], [[a,a],[a,a]], ... until it stabilizes (last entry repeated once
/// is not included). Throws ErrorKind::NotASubalgebra.
std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& a);
bool is_solvable(const LieAlgebra& g, const Subspace& a);
/// a, [a,a], [a,[a,a]], ... until it stabilizes.
std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& a);
bool is_nilpotent_algebra(const LieAlgebra& g, const Subspace& a);

/// kappa(e_i, e_j) = trace(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);
/// Cartan's criterion on the subalgebra a with its own bracket.
bool is_semisimple_algebra(const LieAlgebra& g, const Subspace& a);

/// Killing-orthogonal complement of [g, g]. The result is checked to be a
/// solvable ideal with semisimple quotient.
Subspace radical(const LieAlgebra& g);
/// The Killing-orthogonal of [g,g] without the checks radical() runs on it.
Subspace killing_radical(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

struct AlgebraMap {
  /// target_dim x source_dim
  Matrix matrix;
  Vector operator()(const Vector& v) const { return matrix * v; }
};

bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const AlgebraMap& map);

struct QuotientData {
  LieAlgebra quotient;
  AlgebraMap projection;
  /// Linear section onto the coordinate axes that are not pivots of the ideal.
  AlgebraMap section;
};

/// Throws ErrorKind::NotAnIdeal.
QuotientData quotient(const LieAlgebra& g, const Subspace& ideal);

struct SubalgebraData {
  LieAlgebra algebra;
  /// Basis of the subalgebra is the canonical basis of the subspace.
  AlgebraMap inclusion;
};

/// Throws ErrorKind::NotASubalgebra.
SubalgebraData subalgebra(const LieAlgebra& g, const Subspace& a);

bool is_derivation(const LieAlgebra& g, const Matrix& d);

struct ExtensionData {
  LieAlgebra algebra;
  /// g -> g1, onto the first dim(g) coordinates.
  AlgebraMap inclusion;
  /// Coordinates of the adjoined elements in g1.
  std::vector<std::size_t> adjoined;
  /// Index into the input family for each adjoined element.
  std::vector<std::size_t> kept;
};

/// g1 = g + span{H_j}: the H_j commute with each other and act on g through
/// their derivations. Derivations linearly dependent on earlier ones are
/// dropped. Throws ErrorKind::NotADerivation or ErrorKind::NotCommuting.
ExtensionData semidirect_extend(const LieAlgebra& g, const DerivationFamily& family);

}  // namespace glevi
