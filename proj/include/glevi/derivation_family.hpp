#pragma once

#include <string>
#include <vector>

#include "glevi/matrix.hpp"

namespace glevi {

/// A list of derivation matrices acting on the coordinates of one algebra.
/// Validity (derivation law, commuting, rationally semisimple) is checked by
/// validate_family, not enforced on construction.
struct DerivationFamily {
  std::vector<Matrix> matrices;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return matrices.size(); }
  bool empty() const noexcept { return matrices.empty(); }
};

}  // namespace glevi
