#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glevi/gradings.hpp"
#include "glevi/lie_algebra.hpp"

namespace glevi {

struct ExpectedDecomposition {
  Subspace levi;
  Subspace radical;
};

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::vector<Grading> gradings;
  /// Explicit families; the families induced by `gradings` are not repeated here.
  std::vector<DerivationFamily> derivations;
  std::optional<ExpectedDecomposition> expected;
  std::string notes;
};

std::vector<std::string> catalog_list();
/// Throws ErrorKind::UnknownName.
CatalogEntry catalog_get(std::string_view name);

struct RandomInstance {
  LieAlgebra algebra;
  Grading grading;
  DerivationFamily family;
  Subspace expected_levi;
};

/// Semisimple block sl2 or sl2 + sl2 acting on a graded nilpotent radical of
/// irreducible modules (optionally with a central element making one odd module
/// a Heisenberg algebra), moved by exp(ad X), X in the radical, and by an
/// integer unit-triangular change of basis. Deterministic in `seed`.
RandomInstance random_instance(std::uint64_t seed, std::size_t max_dim);

}  // namespace glevi
