#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glevi/derivation_family.hpp"
#include "glevi/lie_algebra.hpp"

namespace glevi {

using Degree = std::vector<std::int64_t>;

Degree operator+(const Degree& a, const Degree& b);
std::string to_string(const Degree& d);

struct GradedComponent {
  Degree degree;
  Subspace space;

  friend bool operator==(const GradedComponent& a, const GradedComponent& b) {
    return a.degree == b.degree && a.space == b.space;
  }
};

/// A Z^rank-grading g = sum_m g_m, stored as nonzero components sorted by
/// degree. Bracket compatibility is checked by validate_grading.
class Grading {
 public:
  Grading() = default;
  /// Drops zero components and sorts by degree. Throws ErrorKind::NotAGrading
  /// on repeated degrees or a degree of the wrong length.
  Grading(std::size_t rank, std::vector<GradedComponent> components);

  /// One degree per basis vector of a grading-adapted basis.
  static Grading from_basis_degrees(std::size_t rank, const std::vector<Degree>& degrees);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<GradedComponent>& components() const noexcept { return components_; }
  /// Component of the given degree, or nullptr if it is zero.
  const Subspace* component(const Degree& degree) const;
  /// Per-basis-vector degrees when every component is spanned by coordinate axes.
  std::optional<std::vector<Degree>> basis_degrees() const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.rank_ == b.rank_ && a.components_ == b.components_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<GradedComponent> components_;
};

struct GradingViolation {
  Degree m;
  Degree n;
  std::string reason;
};

std::optional<GradingViolation> find_grading_violation(const LieAlgebra& g, const Grading& grading);
/// Throws ErrorKind::NotAGrading with the first violating degree pair.
void validate_grading(const LieAlgebra& g, const Grading& grading);

/// Matrix j acts on the component of degree m as the scalar m_j.
DerivationFamily grading_to_derivations(const LieAlgebra& g, const Grading& grading);
/// Joint eigenspaces as components. Throws ErrorKind::IrrationalSpectrum or
/// ErrorKind::NonIntegerDegree.
Grading derivations_to_grading(const LieAlgebra& g, const DerivationFamily& family);

struct FamilyReport {
  std::vector<std::size_t> not_derivation;
  std::vector<std::pair<std::size_t, std::size_t>> not_commuting;
  std::vector<std::size_t> not_semisimple;
  std::vector<std::size_t> irrational_spectrum;
  std::vector<std::size_t> wrong_size;

  bool ok() const {
    return not_derivation.empty() && not_commuting.empty() && not_semisimple.empty() &&
           irrational_spectrum.empty() && wrong_size.empty();
  }
  std::string summary() const;
};

FamilyReport validate_family(const LieAlgebra& g, const DerivationFamily& family);
/// Throws the error matching the first failure in validate_family's report.
void require_valid_family(const LieAlgebra& g, const DerivationFamily& family);

/// Components W cap g_m (nonzero ones only). Throws ErrorKind::NotGraded when
/// they do not add up to W.
std::vector<GradedComponent> restrict_grading(const LieAlgebra& g, const Grading& grading, const Subspace& w);

}  // namespace glevi
