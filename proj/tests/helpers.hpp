#pragma once

#include <functional>
#include <initializer_list>

#include "doctest.h"
#include "glevi/error.hpp"

#include "glevi/catalog.hpp"
#include "glevi/matrix.hpp"
#include "glevi/subspace.hpp"
#include "oracle.hpp"

namespace testing {

inline glevi::Vector vec(std::initializer_list<glevi::Rational> xs) { return glevi::Vector(xs); }

inline glevi::Matrix mat(std::initializer_list<std::initializer_list<glevi::Rational>> rows) {
  std::vector<glevi::Vector> rs;
  for (const auto& r : rows) rs.emplace_back(r);
  return glevi::Matrix::from_rows(rs, rs.empty() ? 0 : rs[0].size());
}

inline glevi::Subspace span(std::size_t n, std::initializer_list<glevi::Vector> vs) {
  return glevi::Subspace::span(n, std::vector<glevi::Vector>(vs));
}

inline oracle::Mat rows(const glevi::Subspace& s) { return s.basis_vectors(); }

inline oracle::Mat rows(const glevi::Matrix& m) { return m.row_vectors(); }

inline glevi::LieAlgebra algebra(const char* name) { return glevi::catalog_get(name).algebra; }

inline glevi::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const glevi::Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return glevi::ErrorKind::AssertionFailed;
}

}  // namespace testing
