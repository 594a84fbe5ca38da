#pragma once

#include <string>
#include <vector>

#include "glevi/levi.hpp"

namespace glevi {

/// delta = ad(h_levi) + residual with h_levi in the Levi factor and residual
/// vanishing on it.
struct DerivationSplit {
  std::string label;
  Vector h_levi;
  Matrix residual;
};

struct SplitResult {
  std::vector<DerivationSplit> splits;
  /// Span of all h_levi; an abelian subalgebra of the Levi factor.
  Subspace inner_span;
};

/// Solves [h, x] = delta x over a basis of `levi`. Throws ErrorKind::NotInvariant
/// if delta does not preserve levi and ErrorKind::NoInnerRepresentative if the
/// system has no solution or more than one.
DerivationSplit split_derivation(const LieAlgebra& g, const Subspace& levi, const Matrix& delta);

/// Splits every member of the certificate's family and checks that the inner
/// parts, the residuals, and residuals against ad(levi) all commute. Throws
/// ErrorKind::PreconditionViolated if the certificate does not verify and
/// ErrorKind::AssertionFailed naming the first nonzero commutator.
SplitResult split_family(const LieAlgebra& g, const LeviCertificate& cert);

}  // namespace glevi
