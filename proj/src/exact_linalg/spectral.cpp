#include "glevi/spectral.hpp"

#include <algorithm>

#include "glevi/error.hpp"

namespace glevi {

namespace {

// Annihilator of v under m: the monic p of least degree with p(m)v = 0.
// Also returns the Krylov vectors v, mv, ..., m^{k-1}v.
Polynomial krylov_annihilator(const Matrix& m, const Vector& v, std::vector<Vector>& chain) {
  chain.clear();
  chain.push_back(v);
  while (true) {
    Vector next = m * chain.back();
    auto coeffs = solve(Matrix::from_columns(chain, v.size()), next);
    if (coeffs) {
      Vector p(chain.size() + 1);
      for (std::size_t i = 0; i < chain.size(); ++i) p[i] = -(*coeffs)[i];
      p[chain.size()] = 1;
      return Polynomial(std::move(p));
    }
    chain.push_back(std::move(next));
  }
}

}  // namespace

Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Polynomial result = Polynomial::constant(1);
  Subspace covered(n);
  std::vector<Vector> chain;
  for (std::size_t i = 0; i < n && !covered.is_full(); ++i) {
    Vector e = unit_vector(n, i);
    // The lcm so far already kills everything in the covered Krylov spaces.
    if (covered.contains(e)) continue;
    result = lcm(result, krylov_annihilator(m, e, chain));
    std::vector<Vector> all = covered.basis_vectors();
    all.insert(all.end(), chain.begin(), chain.end());
    covered = Subspace::span(n, all);
  }
  return result;
}

namespace {

// Rational roots of a squarefree polynomial, or IrrationalSpectrum when it
// does not split.
std::vector<Rational> split_roots(const Polynomial& p) {
  auto roots = rational_roots(p);
  if (static_cast<long>(roots.size()) != p.degree()) {
    throw Error(ErrorKind::IrrationalSpectrum,
                "minimal polynomial " + to_string(p) + " has an irreducible factor of degree > 1 over Q");
  }
  return roots;
}

}  // namespace

bool is_semisimple_rational(const Matrix& m) {
  const Polynomial p = min_poly(m);
  if (!is_squarefree(p)) return false;
  split_roots(p);
  return true;
}

std::vector<Eigenspace> rational_eigen_decomposition(const Matrix& m) {
  const Polynomial p = min_poly(m);
  if (!is_squarefree(p)) {
    throw Error(ErrorKind::NotSemisimple, "minimal polynomial " + to_string(p) + " is not squarefree");
  }
  std::vector<Eigenspace> out;
  const std::size_t n = m.rows();
  for (const auto& root : split_roots(p)) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= root;
    out.push_back({root, kernel(shifted)});
  }
  return out;
}

std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Matrix>& ms, std::size_t n) {
  for (const auto& m : ms) {
    if (!m.is_square() || m.rows() != n) throw Error(ErrorKind::DimensionMismatch, "joint eigenspaces: matrix size");
  }
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (!commutator(ms[a], ms[b]).is_zero()) {
        throw Error(ErrorKind::NotCommuting,
                    "matrices " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
      }

  std::vector<JointEigenspace> pieces{{Vector{}, Subspace::full(n)}};
  for (const auto& m : ms) {
    const auto eigen = rational_eigen_decomposition(m);
    std::vector<JointEigenspace> refined;
    for (const auto& piece : pieces) {
      for (const auto& [value, space] : eigen) {
        Subspace meet = subspace_intersection(piece.space, space);
        if (meet.is_zero()) continue;
        Vector w = piece.weight;
        w.push_back(value);
        refined.push_back({std::move(w), std::move(meet)});
      }
    }
    pieces = std::move(refined);
  }
  if (n == 0) pieces.clear();
  std::sort(pieces.begin(), pieces.end(),
            [](const JointEigenspace& a, const JointEigenspace& b) { return lex_less(a.weight, b.weight); });
  return pieces;
}

}  // namespace glevi
