#include "glevi/error.hpp"
#include "glevi/levi.hpp"
#include "glevi/spectral.hpp"

namespace glevi {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::PreconditionViolated, what);
}

void check_preconditions(const LieAlgebra& g, const Subspace& l, const Subspace& r) {
  const std::size_t n = g.dim();
  require(l.ambient_dim() == n && r.ambient_dim() == n, "subspaces must live in g");
  require(bracket_subspaces(g, r, r).is_zero(), "r must be abelian");
  require(bracket_subspaces(g, Subspace::full(n), r) == r, "[g, r] must equal r");
  require(center(g).is_zero(), "the centre of g must be trivial");
  require(is_subalgebra(g, l), "l must be a subalgebra");
  require(l.dim() + r.dim() == n && subspace_intersection(l, r).is_zero(), "g must be the direct sum of l and r");
}

std::pair<Vector, Vector> split_along(const Subspace& l, const Subspace& r, const Vector& v) {
  std::vector<Vector> columns = l.basis_vectors();
  const auto rs = r.basis_vectors();
  columns.insert(columns.end(), rs.begin(), rs.end());
  auto coeffs = solve(Matrix::from_columns(columns, v.size()), v);
  require(coeffs.has_value(), "vector is not in l + r");
  Vector in_l = zero_vector(v.size());
  Vector in_r = zero_vector(v.size());
  for (std::size_t i = 0; i < columns.size(); ++i) axpy(i < l.dim() ? in_l : in_r, (*coeffs)[i], columns[i]);
  return {in_l, in_r};
}

// `h` agrees with delta on l: [h, x] = delta x for x in l. When delta = ad(h)
// everywhere, `inner` is set and h must land in the corrected factor.
Case2bCorrection correct(const LieAlgebra& g, const Subspace& l, const Subspace& r, const Matrix& delta,
                         const Vector& h, bool inner) {
  const std::size_t n = g.dim();
  auto [h_levi, h_radical] = split_along(l, r, h);

  // Split h_radical along the eigenspaces of delta on r.
  const auto eigen = rational_eigen_decomposition(restrict_operator(delta, r));
  std::vector<Vector> eigvecs;
  for (const auto& e : eigen) {
    const auto vs = e.space.basis_vectors();
    eigvecs.insert(eigvecs.end(), vs.begin(), vs.end());
  }
  const Vector coeffs = *solve(Matrix::from_columns(eigvecs, r.dim()), *r.coordinates(h_radical));

  Vector h_zero = zero_vector(n);
  Vector x = zero_vector(n);
  std::size_t at = 0;
  for (const auto& [value, space] : eigen) {
    Vector part = zero_vector(r.dim());
    for (std::size_t i = 0; i < space.dim(); ++i, ++at) axpy(part, coeffs[at], eigvecs[at]);
    const Vector ambient = lift(r, part);
    if (sgn(value) == 0) {
      h_zero = ambient;
    } else {
      axpy(x, -1 / value, ambient);
    }
  }
  if (!is_zero(h_zero)) {
    throw Error(ErrorKind::AssertionFailed,
                "H_0 = " + to_string(h_zero) +
                    " is nonzero, but ad(H_0) is both semisimple and nilpotent, hence null, and the centre is trivial");
  }

  const Matrix ad_x = ad_matrix(g, x);
  if (!(ad_x * ad_x).is_zero()) throw Error(ErrorKind::AssertionFailed, "ad(X)^2 != 0 for X in the abelian radical");

  const Matrix move = Matrix::identity(n) + ad_x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = move * g.basis_bracket(i, j);
      if (!(lhs == bracket(g, move.column(i), move.column(j)))) {
        throw Error(ErrorKind::AssertionFailed, "1 + ad(X) is not a bracket automorphism");
      }
    }
  }

  std::vector<Vector> moved;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Vector b = l.basis_vector(i);
    moved.push_back(b + ad_x * b);
  }
  Subspace corrected = Subspace::span(n, moved);

  if (inner && !corrected.contains(h)) {
    throw Error(ErrorKind::AssertionFailed, "H is not in the corrected Levi factor (expected H = H~_l + H_0 with H_0 = 0)");
  }
  if (!is_subalgebra(g, corrected) || corrected.dim() != l.dim() ||
      !subspace_intersection(corrected, r).is_zero()) {
    throw Error(ErrorKind::AssertionFailed, "(1 + ad X) l is not a Levi subalgebra");
  }
  if (!is_invariant(delta, corrected)) {
    throw Error(ErrorKind::AssertionFailed, "corrected Levi factor is not invariant under the derivation");
  }
  return {h, std::move(h_levi), std::move(h_radical), std::move(h_zero), std::move(x), std::move(corrected)};
}

}  // namespace

Case2bCorrection case2b_correct(const LieAlgebra& g, const Subspace& l, const Subspace& r, const Vector& h) {
  check_preconditions(g, l, r);
  require(h.size() == g.dim(), "H must be a vector of g");
  const Matrix ad_h = ad_matrix(g, h);
  require(is_semisimple_rational(ad_h), "ad(H) must be semisimple");
  return correct(g, l, r, ad_h, h, true);
}

Case2bCorrection case2b_correct_derivation(const LieAlgebra& g, const Subspace& l, const Subspace& r,
                                           const Matrix& delta) {
  check_preconditions(g, l, r);
  const std::size_t n = g.dim();
  require(delta.is_square() && delta.rows() == n, "derivation must act on g");
  require(is_derivation(g, delta), "delta must be a derivation");
  require(is_semisimple_rational(delta), "delta must be semisimple");
  require(is_invariant(delta, r), "delta must preserve r");

  // [h, x] = delta x, i.e. -ad(x) h = delta x, for every basis vector x of l.
  std::vector<Matrix> blocks;
  Vector rhs;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Vector x = l.basis_vector(i);
    blocks.push_back(Rational(-1) * ad_matrix(g, x));
    const Vector dx = delta * x;
    rhs.insert(rhs.end(), dx.begin(), dx.end());
  }
  const Matrix system = vstack(blocks, n);
  auto h = solve(system, rhs);
  if (!h) throw Error(ErrorKind::AssertionFailed, "derivation has no inner representative on the Levi factor");
  if (!kernel(system).is_zero()) {
    throw Error(ErrorKind::AssertionFailed, "centraliser of the Levi factor is nonzero");
  }
  return correct(g, l, r, delta, *h, false);
}

}  // namespace glevi
