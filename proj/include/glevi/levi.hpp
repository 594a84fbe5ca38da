#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glevi/gradings.hpp"
#include "glevi/lie_algebra.hpp"

namespace glevi {

enum class CaseLabel { Semisimple, Case1, Case2a, Case2b, Extend };

std::string_view case_name(CaseLabel label);
std::optional<CaseLabel> parse_case_name(std::string_view name);

/// One step of the invariant Levi recursion.
struct CaseStep {
  CaseLabel label;
  std::size_t algebra_dim;
  std::size_t depth;
  /// Case 1: the invariant ideal quotiented by (coordinates of the algebra at this step).
  std::optional<Subspace> ideal;
  /// Case 2b: the element whose adjoint action is made to preserve the Levi
  /// factor; for a family of derivations this is the inner representative on
  /// the uncorrected factor.
  std::optional<Vector> generic_h;
};

/// Data of one Case 2b correction l -> (1 + ad X) l.
///
/// H = H_l + H_r along g = l + r, H_r = H_0 + (part in the image of ad H),
/// and X solves ad(H) X = H_0 - H_r inside the image part.
struct Case2bCorrection {
  Vector h;
  Vector h_levi;
  Vector h_radical;
  Vector h_zero;
  Vector x;
  Subspace corrected_levi;
};

struct RootSpace {
  Vector root;
  Subspace space;
};
using RootDecomposition = std::vector<RootSpace>;

struct ExtensionFacts {
  /// Every basis vector of the Levi factor of g1 vanishes on the adjoined directions.
  bool levi_in_g = false;
  /// g cap radical(g1) = radical(g).
  bool radical_restricts = false;
};

struct LeviCertificate {
  Subspace levi;
  Subspace radical;
  DerivationFamily family;
  std::vector<CaseStep> trace;
  std::vector<std::pair<std::string, bool>> checks;
  std::optional<ExtensionFacts> extension;

  bool all_checks_pass() const;
};

/// Names of the verifier checks, in report order.
inline constexpr const char* kCheckSubalgebra = "subalgebra";
inline constexpr const char* kCheckKilling = "killing_nondegenerate";
inline constexpr const char* kCheckRadical = "radical";
inline constexpr const char* kCheckDirectSum = "direct_sum";
inline constexpr const char* kCheckInvariant = "family_invariant";

struct VerificationReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
  bool passed(const std::string& name) const;
};

/// Recomputes every check on (levi, radical, family) from scratch.
VerificationReport verify_certificate(const LieAlgebra& g, const LeviCertificate& cert);

/// Levi subalgebra by the classical cocycle construction, recursing on the
/// derived series of the radical. Deterministic.
Subspace classical_levi(const LieAlgebra& g);

/// Joint eigenspaces of the family restricted to r, mapped back to g.
RootDecomposition root_space_decomposition(const LieAlgebra& g, const Subspace& r,
                                           const std::vector<Matrix>& family);

/// Coefficients t = (1, s, s^2, ...) for the least s = 1, 2, ... with
/// alpha(t) != 0 for every nonzero root alpha.
Vector generic_element(const RootDecomposition& roots, std::size_t family_size);

/// Makes l invariant under ad(H) by conjugating with 1 + ad X, X in r.
/// Requires r abelian, [g, r] = r, trivial centre, ad(H) rationally
/// semisimple and g = l + r with l a subalgebra; throws
/// ErrorKind::PreconditionViolated otherwise.
Case2bCorrection case2b_correct(const LieAlgebra& g, const Subspace& l, const Subspace& r, const Vector& h);

/// Same correction for a semisimple derivation that need not be inner. H is
/// the unique element with ad(H) = delta on l.
Case2bCorrection case2b_correct_derivation(const LieAlgebra& g, const Subspace& l, const Subspace& r,
                                           const Matrix& delta);

struct InvariantLevi {
  Subspace levi;
  std::vector<CaseStep> trace;
};

/// Levi subalgebra invariant under ad(a) for an abelian a spanned by
/// `a_basis`, each ad(a_i) rationally semisimple.
InvariantLevi inner_invariant_levi(const LieAlgebra& g, const std::vector<Vector>& a_basis);

/// Levi subalgebra invariant under every member of a commuting family of
/// rationally semisimple derivations, with a fully evaluated certificate.
LeviCertificate invariant_levi(const LieAlgebra& g, const DerivationFamily& family);

struct GradedLevi {
  LeviCertificate certificate;
  std::vector<GradedComponent> levi_components;
  std::vector<GradedComponent> radical_components;
};

GradedLevi graded_levi(const LieAlgebra& g, const Grading& grading);

/// Recursion depth bound: 2 dim(g) + 2 |family| + 4.
std::size_t depth_cap(std::size_t dim, std::size_t family_size);

}  // namespace glevi
