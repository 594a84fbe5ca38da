#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glevi/matrix.hpp"

namespace glevi {

/// Linear subspace of Q^n held in canonical form: the basis matrix is in
/// reduced row echelon form with no zero rows, so two subspaces are equal
/// exactly when their basis matrices are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  /// Span of the given coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim_; }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// v minus its projection onto this subspace along the non-pivot axes; the
  /// result has zeros at every pivot column and vanishes iff v lies in here.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, or nothing when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Matrix whose columns are the basis vectors (ambient x dim).
  Matrix basis_columns() const { return basis_.transpose(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of m as a subspace of Q^{cols(m)}.
Subspace kernel(const Matrix& m);
/// Column space of m as a subspace of Q^{rows(m)}.
Subspace image(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// m applied to every vector of s.
Subspace apply(const Matrix& m, const Subspace& s);
bool is_invariant(const Matrix& m, const Subspace& s);
/// Matrix of m restricted to an invariant subspace, in the subspace's
/// canonical basis. Throws ErrorKind::NotInvariant otherwise.
Matrix restrict_operator(const Matrix& m, const Subspace& s);
/// Expresses vectors given in the subspace's coordinates back in ambient ones.
Vector lift(const Subspace& s, const Vector& coords);

}  // namespace glevi
