#pragma once

#include <vector>

#include "glevi/polynomial.hpp"
#include "glevi/subspace.hpp"

namespace glevi {

/// Monic minimal polynomial, as the lcm of the annihilators of the Krylov
/// chains started at the standard basis vectors.
Polynomial min_poly(const Matrix& m);

/// True iff m is diagonalizable over Q. Throws ErrorKind::IrrationalSpectrum
/// when the minimal polynomial is squarefree but does not split over Q.
bool is_semisimple_rational(const Matrix& m);

struct Eigenspace {
  Rational value;
  Subspace space;
};

/// Eigenspaces of a rationally diagonalizable matrix, eigenvalues ascending.
/// Throws ErrorKind::NotSemisimple or ErrorKind::IrrationalSpectrum.
std::vector<Eigenspace> rational_eigen_decomposition(const Matrix& m);

struct JointEigenspace {
  Vector weight;
  Subspace space;
};

/// Simultaneous eigenspaces of pairwise commuting, rationally diagonalizable
/// n x n matrices, weights in lexicographic order. An empty family yields a
/// single empty weight on the whole space.
std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Matrix>& ms, std::size_t n);

}  // namespace glevi
