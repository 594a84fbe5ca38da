#include "glevi/error.hpp"
#include "glevi/levi.hpp"

namespace glevi {

namespace {

// Base case: the radical r is abelian. With the coordinate section s of
// g -> g/r, the defect c(a,b) = [s a, s b] - s[a,b] lies in r, and a map
// phi: g/r -> r with
//   [s a, phi b] - [s b, phi a] - phi[a,b] = -c(a,b)
// for all basis pairs makes s + phi a homomorphism. Its image is a Levi
// subalgebra.
Subspace levi_over_abelian_radical(const LieAlgebra& g, const Subspace& r) {
  const std::size_t n = g.dim();
  const QuotientData q = quotient(g, r);
  const std::size_t k = q.quotient.dim();
  const std::size_t d = r.dim();
  const auto rho = r.basis_vectors();

  std::vector<Vector> sections;
  for (std::size_t a = 0; a < k; ++a) sections.push_back(q.section.matrix.column(a));
  // [s_a, rho_t]
  std::vector<std::vector<Vector>> acts(k);
  for (std::size_t a = 0; a < k; ++a) {
    const Matrix ad = ad_matrix(g, sections[a]);
    for (std::size_t t = 0; t < d; ++t) acts[a].push_back(ad * rho[t]);
  }

  const std::size_t pairs = k * (k - 1) / 2;
  Matrix system(pairs * n, k * d);
  Vector rhs(pairs * n, Rational(0));
  std::size_t block = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j, ++block) {
      const Vector quotient_bracket = q.quotient.basis_bracket(i, j);
      Vector defect = bracket(g, sections[i], sections[j]);
      for (std::size_t m = 0; m < k; ++m) axpy(defect, -quotient_bracket[m], sections[m]);
      const std::size_t row0 = block * n;
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t row = 0; row < n; ++row) {
          system(row0 + row, j * d + t) += acts[i][t][row];
          system(row0 + row, i * d + t) -= acts[j][t][row];
          for (std::size_t m = 0; m < k; ++m) {
            if (sgn(quotient_bracket[m]) != 0) system(row0 + row, m * d + t) -= quotient_bracket[m] * rho[t][row];
          }
        }
      }
      for (std::size_t row = 0; row < n; ++row) rhs[row0 + row] = -defect[row];
    }
  }
  auto phi = solve(system, rhs);
  if (!phi) throw Error(ErrorKind::InconsistentCocycle, "no splitting map for the abelian radical");

  std::vector<Vector> lifted;
  for (std::size_t a = 0; a < k; ++a) {
    Vector v = sections[a];
    for (std::size_t t = 0; t < d; ++t) axpy(v, (*phi)[a * d + t], rho[t]);
    lifted.push_back(std::move(v));
  }
  Subspace levi = Subspace::span(n, lifted);
  if (levi.dim() != k || !is_subalgebra(g, levi)) {
    throw Error(ErrorKind::InconsistentCocycle, "splitting map does not produce a subalgebra");
  }
  return levi;
}

}  // namespace

Subspace classical_levi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace r = killing_radical(g);
  if (r.is_zero()) return Subspace::full(n);
  if (r.is_full()) return Subspace::zero(n);

  const Subspace rr = bracket_subspaces(g, r, r);
  if (rr.is_zero()) return levi_over_abelian_radical(g, r);

  // Levi factor of g/[r,r], pulled back to h, whose radical is [r,r].
  const QuotientData q = quotient(g, rr);
  const Subspace top = classical_levi(q.quotient);
  std::vector<Vector> vectors = rr.basis_vectors();
  for (std::size_t i = 0; i < top.dim(); ++i) vectors.push_back(q.section(top.basis_vector(i)));
  const SubalgebraData h = subalgebra(g, Subspace::span(n, vectors));
  return apply(h.inclusion.matrix, classical_levi(h.algebra));
}

}  // namespace glevi
