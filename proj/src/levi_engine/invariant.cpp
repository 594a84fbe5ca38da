#include <algorithm>

#include "glevi/error.hpp"
#include "glevi/levi.hpp"
#include "glevi/spectral.hpp"

namespace glevi {

std::string_view case_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::Semisimple: return "semisimple";
    case CaseLabel::Case1: return "case1";
    case CaseLabel::Case2a: return "case2a";
    case CaseLabel::Case2b: return "case2b";
    case CaseLabel::Extend: return "extend";
  }
  return "?";
}

std::optional<CaseLabel> parse_case_name(std::string_view name) {
  for (CaseLabel label :
       {CaseLabel::Semisimple, CaseLabel::Case1, CaseLabel::Case2a, CaseLabel::Case2b, CaseLabel::Extend}) {
    if (case_name(label) == name) return label;
  }
  return std::nullopt;
}

std::size_t depth_cap(std::size_t dim, std::size_t family_size) { return 2 * dim + 2 * family_size + 4; }

RootDecomposition root_space_decomposition(const LieAlgebra& g, const Subspace& r,
                                           const std::vector<Matrix>& family) {
  std::vector<Matrix> restricted;
  for (const auto& m : family) restricted.push_back(restrict_operator(m, r));
  RootDecomposition out;
  for (auto& [weight, space] : joint_eigenspaces(restricted, r.dim())) {
    std::vector<Vector> vectors;
    for (const auto& v : space.basis_vectors()) vectors.push_back(lift(r, v));
    out.push_back({weight, Subspace::span(g.dim(), vectors)});
  }
  return out;
}

Vector generic_element(const RootDecomposition& roots, std::size_t family_size) {
  if (family_size == 0) return {};
  for (long s = 1;; ++s) {
    Vector t(family_size);
    Rational power(1);
    for (auto& c : t) {
      c = power;
      power *= s;
    }
    const bool good = std::all_of(roots.begin(), roots.end(), [&](const RootSpace& root) {
      return is_zero(root.root) || sgn(dot(root.root, t)) != 0;
    });
    if (good) return t;
  }
}

namespace {

// The family acting on the algebra at the current step: operators, and the
// elements they are ad of when every member is inner.
struct Action {
  std::vector<Matrix> ops;
  std::optional<std::vector<Vector>> elements;
};

class Ladder {
 public:
  explicit Ladder(std::size_t cap) : cap_(cap) {}

  Subspace run(const LieAlgebra& g, const Action& action, std::size_t depth) {
    if (depth > cap_) {
      throw Error(ErrorKind::DepthCapExceeded, "recursion depth " + std::to_string(depth) + " exceeds " +
                                                   std::to_string(cap_));
    }
    const std::size_t n = g.dim();
    const Subspace r = killing_radical(g);
    if (r.is_zero()) {
      trace.push_back({CaseLabel::Semisimple, n, depth, std::nullopt, std::nullopt});
      return Subspace::full(n);
    }
    const Subspace rr = bracket_subspaces(g, r, r);
    if (!rr.is_zero()) return reduce(g, action, rr, depth);
    const Subspace gr = bracket_subspaces(g, Subspace::full(n), r);
    if (gr.is_zero()) {
      trace.push_back({CaseLabel::Case2a, n, depth, std::nullopt, std::nullopt});
      return bracket_subspaces(g, Subspace::full(n), Subspace::full(n));
    }
    if (!(gr == r)) return reduce(g, action, gr, depth);
    return correct(g, action, r, depth);
  }

  std::vector<CaseStep> trace;

 private:
  // Nonzero invariant ideal i properly inside r: Levi factor of g/i, pulled
  // back to h = s(levi) + i, then the Levi factor of h.
  Subspace reduce(const LieAlgebra& g, const Action& action, const Subspace& ideal, std::size_t depth) {
    trace.push_back({CaseLabel::Case1, g.dim(), depth, ideal, std::nullopt});
    const QuotientData q = quotient(g, ideal);

    Action below;
    for (const auto& op : action.ops) below.ops.push_back(q.projection.matrix * op * q.section.matrix);
    if (action.elements) {
      below.elements.emplace();
      for (const auto& a : *action.elements) below.elements->push_back(q.projection(a));
    }
    const Subspace top = run(q.quotient, below, depth + 1);
    if (top.is_zero()) return Subspace::zero(g.dim());

    std::vector<Vector> vectors = ideal.basis_vectors();
    for (std::size_t i = 0; i < top.dim(); ++i) vectors.push_back(q.section(top.basis_vector(i)));
    const Subspace h_space = Subspace::span(g.dim(), vectors);
    const SubalgebraData h = subalgebra(g, h_space);

    Action inside;
    for (const auto& op : action.ops) inside.ops.push_back(restrict_operator(op, h_space));
    if (action.elements) {
      std::vector<Vector> coords;
      for (const auto& a : *action.elements) {
        auto c = h_space.coordinates(a);
        if (!c) break;
        coords.push_back(std::move(*c));
      }
      if (coords.size() == action.elements->size()) inside.elements = std::move(coords);
    }
    return apply(h.inclusion.matrix, run(h.algebra, inside, depth + 1));
  }

  // r abelian and [g, r] = r.
  Subspace correct(const LieAlgebra& g, const Action& action, const Subspace& r, std::size_t depth) {
    const Subspace l = classical_levi(g);
    if (action.ops.empty()) {
      trace.push_back({CaseLabel::Case2b, g.dim(), depth, std::nullopt, std::nullopt});
      return l;
    }
    const Vector t = generic_element(root_space_decomposition(g, r, action.ops), action.ops.size());
    Case2bCorrection fix;
    if (action.elements) {
      Vector h = zero_vector(g.dim());
      for (std::size_t j = 0; j < t.size(); ++j) axpy(h, t[j], (*action.elements)[j]);
      fix = case2b_correct(g, l, r, h);
    } else {
      Matrix delta(g.dim(), g.dim());
      for (std::size_t j = 0; j < t.size(); ++j) delta += t[j] * action.ops[j];
      fix = case2b_correct_derivation(g, l, r, delta);
    }
    trace.push_back({CaseLabel::Case2b, g.dim(), depth, std::nullopt, fix.h});
    if (action.elements) {
      for (const auto& a : *action.elements) {
        if (!fix.corrected_levi.contains(a)) {
          throw Error(ErrorKind::AssertionFailed,
                      "family element outside the corrected Levi factor (expected H'_a = 0 for a != 0 and H'_0 = 0)");
        }
      }
    }
    for (const auto& op : action.ops) {
      if (!is_invariant(op, fix.corrected_levi)) {
        throw Error(ErrorKind::AssertionFailed, "generic element does not make the Levi factor invariant");
      }
    }
    return fix.corrected_levi;
  }

  std::size_t cap_;
};

}  // namespace

InvariantLevi inner_invariant_levi(const LieAlgebra& g, const std::vector<Vector>& a_basis) {
  const std::size_t n = g.dim();
  Action action;
  action.elements.emplace();
  for (const auto& a : a_basis) {
    if (a.size() != n) throw Error(ErrorKind::DimensionMismatch, "element of a has the wrong length");
    const Matrix ad = ad_matrix(g, a);
    if (!is_semisimple_rational(ad)) throw Error(ErrorKind::PreconditionViolated, "ad(a) is not semisimple");
    for (const auto& b : *action.elements) {
      if (!is_zero(bracket(g, a, b))) throw Error(ErrorKind::PreconditionViolated, "a is not abelian");
    }
    action.ops.push_back(ad);
    action.elements->push_back(a);
  }
  Ladder ladder(depth_cap(n, a_basis.size()));
  Subspace levi = ladder.run(g, action, 1);
  return {std::move(levi), std::move(ladder.trace)};
}

LeviCertificate invariant_levi(const LieAlgebra& g, const DerivationFamily& family) {
  require_valid_family(g, family);
  const std::size_t n = g.dim();
  LeviCertificate cert;
  cert.family = family;
  cert.radical = radical(g);

  if (family.empty()) {
    cert.levi = classical_levi(g);
  } else {
    const ExtensionData ext = semidirect_extend(g, family);
    const std::size_t n1 = ext.algebra.dim();
    cert.trace.push_back({CaseLabel::Extend, n1, 0, std::nullopt, std::nullopt});

    std::vector<Vector> a_basis;
    for (std::size_t idx : ext.adjoined) a_basis.push_back(unit_vector(n1, idx));
    InvariantLevi inner = inner_invariant_levi(ext.algebra, a_basis);
    cert.trace.insert(cert.trace.end(), inner.trace.begin(), inner.trace.end());

    ExtensionFacts facts;
    facts.levi_in_g = true;
    std::vector<Vector> truncated;
    for (const auto& v : inner.levi.basis_vectors()) {
      for (std::size_t idx = n; idx < n1; ++idx) {
        if (sgn(v[idx]) != 0) facts.levi_in_g = false;
      }
      truncated.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    }
    const Subspace g_in_g1 = image(ext.inclusion.matrix);
    const Subspace meet = subspace_intersection(radical(ext.algebra), g_in_g1);
    std::vector<Vector> meet_in_g;
    for (const auto& v : meet.basis_vectors()) meet_in_g.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    facts.radical_restricts = Subspace::span(n, meet_in_g) == cert.radical;
    cert.extension = facts;
    if (!facts.levi_in_g) {
      throw Error(ErrorKind::AssertionFailed, "Levi factor of the extension leaves g");
    }
    if (!facts.radical_restricts) {
      throw Error(ErrorKind::AssertionFailed, "radical of the extension does not restrict to the radical of g");
    }
    cert.levi = Subspace::span(n, truncated);
  }
  cert.checks = verify_certificate(g, cert).checks;
  return cert;
}

GradedLevi graded_levi(const LieAlgebra& g, const Grading& grading) {
  validate_grading(g, grading);
  GradedLevi out;
  out.certificate = invariant_levi(g, grading_to_derivations(g, grading));
  out.levi_components = restrict_grading(g, grading, out.certificate.levi);
  out.radical_components = restrict_grading(g, grading, out.certificate.radical);
  return out;
}

}  // namespace glevi
