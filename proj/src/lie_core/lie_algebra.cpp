#include "glevi/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "glevi/error.hpp"

namespace glevi {

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<StructureConstant>& terms)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> sums;
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n || t.k >= n) {
      throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
    }
    if (t.i == t.j) {
      if (sgn(t.c) != 0) {
        throw Error(ErrorKind::NotALieAlgebra, "[e_" + std::to_string(t.i) + ", e_" + std::to_string(t.i) +
                                                   "] must vanish");
      }
      continue;
    }
    if (t.i < t.j) {
      sums[{t.i, t.j, t.k}] += t.c;
    } else {
      sums[{t.j, t.i, t.k}] -= t.c;
    }
  }
  ad_.assign(n, Matrix(n, n));
  for (const auto& [key, c] : sums) {
    if (sgn(c) == 0) continue;
    const auto [i, j, k] = key;
    structure_.push_back({i, j, k, c});
    ad_[i](k, j) = c;
    ad_[j](k, i) = -c;
  }
}

LieAlgebra LieAlgebra::from_basis_brackets(std::vector<std::string> names,
                                           const std::function<Vector(std::size_t, std::size_t)>& bracket_of_basis) {
  const std::size_t n = names.size();
  std::vector<StructureConstant> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = bracket_of_basis(i, j);
      if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "basis bracket has wrong length");
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(v[k]) != 0) terms.push_back({i, j, k, v[k]});
    }
  }
  return LieAlgebra(std::move(names), terms);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i));
  return LieAlgebra(std::move(names), {});
}

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector sum = g.ad_basis(i) * g.basis_bracket(j, k);
        sum += g.ad_basis(j) * g.basis_bracket(k, i);
        sum += g.ad_basis(k) * g.basis_bracket(i, j);
        if (!is_zero(sum)) return JacobiViolation{i, j, k, sum};
      }
  return std::nullopt;
}

void validate(const LieAlgebra& g) {
  if (auto v = find_jacobi_violation(g)) {
    const auto& names = g.names();
    throw Error(ErrorKind::NotALieAlgebra, "Jacobi identity fails on (" + names[v->i] + ", " + names[v->j] + ", " +
                                               names[v->k] + "): cyclic sum = " + to_string(v->value));
  }
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "bracket");
  Vector out(g.dim(), Rational(0));
  for (const auto& t : g.structure()) {
    const bool a = sgn(x[t.i]) != 0 && sgn(y[t.j]) != 0;
    const bool b = sgn(x[t.j]) != 0 && sgn(y[t.i]) != 0;
    if (a) out[t.k] += t.c * x[t.i] * y[t.j];
    if (b) out[t.k] -= t.c * x[t.j] * y[t.i];
  }
  return out;
}

Matrix ad_matrix(const LieAlgebra& g, const Vector& x) {
  if (x.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "ad_matrix");
  // column j of ad(x) is [x, e_j]
  Matrix m(g.dim(), g.dim());
  for (const auto& t : g.structure()) {
    if (sgn(x[t.i]) != 0) m(t.k, t.j) += t.c * x[t.i];
    if (sgn(x[t.j]) != 0) m(t.k, t.i) -= t.c * x[t.j];
  }
  return m;
}

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "bracket of subspaces");
  }
  std::vector<Vector> products;
  const auto bs = b.basis_vectors();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const Matrix ad = ad_matrix(g, a.basis_vector(r));
    for (const auto& y : bs) products.push_back(ad * y);
  }
  return Subspace::span(g.dim(), products);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& a) { return a.contains(bracket_subspaces(g, a, a)); }

bool is_ideal(const LieAlgebra& g, const Subspace& a) {
  return a.contains(bracket_subspaces(g, Subspace::full(g.dim()), a));
}

std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& a) {
  if (!is_subalgebra(g, a)) throw Error(ErrorKind::NotASubalgebra, "derived series of a non-subalgebra");
  std::vector<Subspace> series{a};
  while (true) {
    Subspace next = bracket_subspaces(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& g, const Subspace& a) { return derived_series(g, a).back().is_zero(); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& a) {
  if (!is_subalgebra(g, a)) throw Error(ErrorKind::NotASubalgebra, "lower central series of a non-subalgebra");
  std::vector<Subspace> series{a};
  while (true) {
    Subspace next = bracket_subspaces(g, a, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent_algebra(const LieAlgebra& g, const Subspace& a) {
  return lower_central_series(g, a).back().is_zero();
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // trace(AB) = sum_{r,c} A(r,c) B(c,r)
      const Matrix& a = g.ad_basis(i);
      const Matrix& b = g.ad_basis(j);
      Rational acc = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(a(r, c)) != 0 && sgn(b(c, r)) != 0) acc += a(r, c) * b(c, r);
      k(i, j) = acc;
      k(j, i) = acc;
    }
  }
  return k;
}

bool is_semisimple_algebra(const LieAlgebra& g, const Subspace& a) {
  const auto sub = subalgebra(g, a);
  return sgn(determinant(killing_form(sub.algebra))) != 0;
}

Subspace killing_radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace full = Subspace::full(n);
  const Subspace derived = bracket_subspaces(g, full, full);
  return kernel(derived.basis() * killing_form(g));
}

Subspace radical(const LieAlgebra& g) {
  const Subspace r = killing_radical(g);
  if (!is_ideal(g, r) || !is_solvable(g, r) ||
      sgn(determinant(killing_form(quotient(g, r).quotient))) == 0) {
    throw Error(ErrorKind::NotALieAlgebra,
                "radical consistency check failed (Killing-orthogonal of [g,g] is not a solvable ideal with "
                "semisimple quotient)");
  }
  return r;
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < n; ++j) blocks.push_back(g.ad_basis(j));
  return kernel(vstack(blocks, n));
}

bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const AlgebraMap& map) {
  const std::size_t n = source.dim();
  if (map.matrix.cols() != n || map.matrix.rows() != target.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "algebra map shape");
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(map.matrix.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (map(source.basis_bracket(i, j)) != bracket(target, images[i], images[j])) return false;
  return true;
}

QuotientData quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "quotient");
  if (!is_ideal(g, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient by a subspace that is not an ideal");
  const std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) kept.push_back(c);
  const std::size_t q = kept.size();

  Matrix projection(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector reduced = ideal.reduce(unit_vector(n, j));
    for (std::size_t a = 0; a < q; ++a) projection(a, j) = reduced[kept[a]];
  }
  Matrix section(n, q);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < q; ++a) {
    section(kept[a], a) = 1;
    names.push_back(g.names()[kept[a]]);
  }
  LieAlgebra algebra = LieAlgebra::from_basis_brackets(
      std::move(names), [&](std::size_t a, std::size_t b) { return projection * g.basis_bracket(kept[a], kept[b]); });
  return {std::move(algebra), {std::move(projection)}, {std::move(section)}};
}

SubalgebraData subalgebra(const LieAlgebra& g, const Subspace& a) {
  if (a.ambient_dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "subalgebra");
  if (!is_subalgebra(g, a)) throw Error(ErrorKind::NotASubalgebra, "subspace is not closed under the bracket");
  const auto basis = a.basis_vectors();
  std::vector<std::string> names;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto& v = basis[r];
    const auto nonzero = std::count_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (nonzero == 1 && v[a.pivots()[r]] == 1) {
      names.push_back(g.names()[a.pivots()[r]]);
    } else {
      names.push_back("s" + std::to_string(r));
    }
  }
  LieAlgebra algebra = LieAlgebra::from_basis_brackets(std::move(names), [&](std::size_t i, std::size_t j) {
    return *a.coordinates(bracket(g, basis[i], basis[j]));
  });
  return {std::move(algebra), {a.basis_columns()}};
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (!d.is_square() || d.rows() != n) throw Error(ErrorKind::DimensionMismatch, "derivation matrix size");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector rhs = g.ad_basis(j) * images[i];  // [e_j, D e_i]
      rhs = g.ad_basis(i) * images[j] - rhs;   // [e_i, D e_j] + [D e_i, e_j]
      if (d * g.basis_bracket(i, j) != rhs) return false;
    }
  return true;
}

ExtensionData semidirect_extend(const LieAlgebra& g, const DerivationFamily& family) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (!is_derivation(g, family.matrices[a])) {
      throw Error(ErrorKind::NotADerivation, "family member " + std::to_string(a) + " is not a derivation");
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (!commutator(family.matrices[a], family.matrices[b]).is_zero()) {
        throw Error(ErrorKind::NotCommuting,
                    "family members " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
      }

  // Keep a derivation only if it is independent of those kept before it.
  std::vector<std::size_t> kept;
  std::vector<Vector> flattened;
  Subspace spanned(n * n);
  for (std::size_t a = 0; a < family.size(); ++a) {
    Vector flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat.push_back(family.matrices[a](r, c));
    if (spanned.contains(flat)) continue;
    flattened.push_back(std::move(flat));
    spanned = Subspace::span(n * n, flattened);
    kept.push_back(a);
  }

  const std::size_t m = kept.size();
  std::vector<std::string> names = g.names();
  std::vector<std::size_t> adjoined;
  for (std::size_t t = 0; t < m; ++t) {
    const auto& label = family.labels.size() == family.size() ? family.labels[kept[t]] : std::to_string(kept[t]);
    names.push_back("H[" + label + "]");
    adjoined.push_back(n + t);
  }
  LieAlgebra algebra =
      LieAlgebra::from_basis_brackets(std::move(names), [&](std::size_t i, std::size_t j) {
        Vector v = zero_vector(n + m);
        if (j < n) {
          const Vector inner = g.basis_bracket(i, j);
          std::copy(inner.begin(), inner.end(), v.begin());
        } else if (i < n) {
          // [e_i, H] = -D e_i
          const Vector image = family.matrices[kept[j - n]].column(i);
          for (std::size_t k = 0; k < n; ++k) v[k] = -image[k];
        }
        return v;
      });
  Matrix inclusion(n + m, n);
  for (std::size_t i = 0; i < n; ++i) inclusion(i, i) = 1;
  return {std::move(algebra), {std::move(inclusion)}, std::move(adjoined), std::move(kept)};
}

}  // namespace glevi
