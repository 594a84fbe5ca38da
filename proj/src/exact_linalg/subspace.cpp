#include "glevi/subspace.hpp"

#include "glevi/error.hpp"

namespace glevi {

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Matrix::identity(ambient_dim)); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = reduced(r, c);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
  std::vector<Vector> vectors;
  for (auto a : axes) vectors.push_back(unit_vector(ambient_dim, a));
  return span(ambient_dim, vectors);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "subspace reduce");
  Vector out = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational coeff = out[pivots_[r]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (sgn(basis_(r, c)) != 0) out[c] -= coeff * basis_(r, c);
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return glevi::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "subspace containment");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(dim());
  for (std::size_t r = 0; r < pivots_.size(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace kernel(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  return Subspace::row_space(vstack({a.basis(), b.basis()}, a.ambient_dim()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  const std::size_t n = a.ambient_dim();
  // Rows (a_i | a_i) and (b_j | 0); after elimination the rows whose left
  // half vanishes carry a basis of the intersection in their right half.
  Matrix stacked(a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      stacked(r, c) = a.basis()(r, c);
      stacked(r, n + c) = a.basis()(r, c);
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) stacked(a.dim() + r, c) = b.basis()(r, c);
  auto [reduced, pivots] = rref(std::move(stacked));
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < n) continue;
    Vector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = reduced(r, n + c);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "apply to subspace");
  std::vector<Vector> images;
  for (std::size_t r = 0; r < s.dim(); ++r) images.push_back(m * s.basis_vector(r));
  return Subspace::span(m.rows(), images);
}

bool is_invariant(const Matrix& m, const Subspace& s) {
  if (!m.is_square() || m.rows() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "invariance test");
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!s.contains(m * s.basis_vector(r))) return false;
  return true;
}

Matrix restrict_operator(const Matrix& m, const Subspace& s) {
  if (!m.is_square() || m.rows() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "restriction");
  Matrix out(s.dim(), s.dim());
  for (std::size_t c = 0; c < s.dim(); ++c) {
    auto coords = s.coordinates(m * s.basis_vector(c));
    if (!coords) throw Error(ErrorKind::NotInvariant, "operator does not preserve the subspace");
    out.set_column(c, *coords);
  }
  return out;
}

Vector lift(const Subspace& s, const Vector& coords) {
  if (coords.size() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "lift from subspace coordinates");
  Vector v = zero_vector(s.ambient_dim());
  for (std::size_t r = 0; r < s.dim(); ++r) axpy(v, coords[r], s.basis_vector(r));
  return v;
}

}  // namespace glevi
