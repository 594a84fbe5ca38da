#include "glevi/derivation_split.hpp"

#include "glevi/error.hpp"

namespace glevi {

DerivationSplit split_derivation(const LieAlgebra& g, const Subspace& levi, const Matrix& delta) {
  const std::size_t n = g.dim();
  if (levi.ambient_dim() != n || delta.rows() != n || delta.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "derivation and Levi factor must act on g");
  }
  if (!is_invariant(delta, levi)) throw Error(ErrorKind::NotInvariant, "derivation does not preserve the Levi factor");

  DerivationSplit out;
  if (levi.is_zero()) {
    out.h_levi = zero_vector(n);
    out.residual = delta;
    return out;
  }
  // Unknown h = sum_i c_i b_i over the levi basis: [h, x] = -ad(x) h.
  const Matrix basis = levi.basis_columns();
  std::vector<Matrix> blocks;
  Vector rhs;
  for (std::size_t i = 0; i < levi.dim(); ++i) {
    const Vector x = levi.basis_vector(i);
    blocks.push_back(Rational(-1) * ad_matrix(g, x) * basis);
    const Vector dx = delta * x;
    rhs.insert(rhs.end(), dx.begin(), dx.end());
  }
  const Matrix system = vstack(blocks, levi.dim());
  auto coeffs = solve(system, rhs);
  if (!coeffs) throw Error(ErrorKind::NoInnerRepresentative, "derivation is not inner on the Levi factor");
  if (!kernel(system).is_zero()) {
    throw Error(ErrorKind::NoInnerRepresentative, "inner representative is not unique; Levi factor has a centre");
  }
  out.h_levi = basis * *coeffs;
  out.residual = delta - ad_matrix(g, out.h_levi);
  return out;
}

namespace {

void expect_commute(const Matrix& a, const Matrix& b, const std::string& what) {
  if (!commutator(a, b).is_zero()) throw Error(ErrorKind::AssertionFailed, what + " do not commute");
}

}  // namespace

SplitResult split_family(const LieAlgebra& g, const LeviCertificate& cert) {
  if (!verify_certificate(g, cert).ok()) {
    throw Error(ErrorKind::PreconditionViolated, "certificate does not verify");
  }
  const std::size_t n = g.dim();
  const auto& family = cert.family;
  SplitResult out;
  std::vector<Matrix> inner;
  std::vector<Vector> parts;
  for (std::size_t j = 0; j < family.size(); ++j) {
    DerivationSplit s = split_derivation(g, cert.levi, family.matrices[j]);
    s.label = j < family.labels.size() ? family.labels[j] : "D" + std::to_string(j);
    const Matrix ad_h = ad_matrix(g, s.h_levi);
    if (!(ad_h + s.residual == family.matrices[j])) {
      throw Error(ErrorKind::AssertionFailed, "ad(H_l) + residual does not reconstruct " + s.label);
    }
    for (const auto& x : cert.levi.basis_vectors()) {
      if (!is_zero(s.residual * x)) throw Error(ErrorKind::AssertionFailed, "residual of " + s.label + " is nonzero on l");
    }
    inner.push_back(ad_h);
    parts.push_back(s.h_levi);
    out.splits.push_back(std::move(s));
  }

  for (std::size_t a = 0; a < out.splits.size(); ++a) {
    const auto& la = out.splits[a].label;
    for (std::size_t b = a + 1; b < out.splits.size(); ++b) {
      const auto& lb = out.splits[b].label;
      expect_commute(inner[a], inner[b], "inner parts ad(H_l) of " + la + " and " + lb);
      expect_commute(out.splits[a].residual, out.splits[b].residual, "residuals of " + la + " and " + lb);
    }
    for (std::size_t b = 0; b < out.splits.size(); ++b) {
      expect_commute(inner[a], out.splits[b].residual,
                     "inner part of " + la + " and residual of " + out.splits[b].label);
    }
    for (const auto& x : cert.levi.basis_vectors()) {
      expect_commute(out.splits[a].residual, ad_matrix(g, x), "residual of " + la + " and ad(l)");
    }
  }

  out.inner_span = Subspace::span(n, parts);
  if (!bracket_subspaces(g, out.inner_span, out.inner_span).is_zero() ||
      !cert.levi.contains(out.inner_span)) {
    throw Error(ErrorKind::AssertionFailed, "inner parts do not span an abelian subalgebra of l");
  }
  return out;
}

}  // namespace glevi
