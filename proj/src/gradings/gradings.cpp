#include "glevi/gradings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "glevi/error.hpp"
#include "glevi/spectral.hpp"

namespace glevi {

Degree operator+(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "degree sum");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::string to_string(const Degree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

Grading::Grading(std::size_t rank, std::vector<GradedComponent> components) : rank_(rank) {
  for (auto& c : components) {
    if (c.degree.size() != rank) {
      throw Error(ErrorKind::NotAGrading, "degree " + to_string(c.degree) + " does not have rank " +
                                              std::to_string(rank));
    }
    if (!c.space.is_zero()) components_.push_back(std::move(c));
  }
  std::sort(components_.begin(), components_.end(),
            [](const GradedComponent& a, const GradedComponent& b) { return a.degree < b.degree; });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i].degree == components_[i - 1].degree) {
      throw Error(ErrorKind::NotAGrading, "degree " + to_string(components_[i].degree) + " listed twice");
    }
  }
}

Grading Grading::from_basis_degrees(std::size_t rank, const std::vector<Degree>& degrees) {
  const std::size_t n = degrees.size();
  std::map<Degree, std::vector<std::size_t>> axes;
  for (std::size_t i = 0; i < n; ++i) axes[degrees[i]].push_back(i);
  std::vector<GradedComponent> components;
  for (const auto& [degree, list] : axes) components.push_back({degree, Subspace::coordinate(n, list)});
  return Grading(rank, std::move(components));
}

const Subspace* Grading::component(const Degree& degree) const {
  for (const auto& c : components_)
    if (c.degree == degree) return &c.space;
  return nullptr;
}

std::optional<std::vector<Degree>> Grading::basis_degrees() const {
  if (components_.empty()) return std::vector<Degree>{};
  const std::size_t n = components_.front().space.ambient_dim();
  std::vector<std::optional<Degree>> per_axis(n);
  for (const auto& c : components_) {
    const Matrix& b = c.space.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t col = 0; col < n; ++col) {
        if (col != c.space.pivots()[r] && sgn(b(r, col)) != 0) return std::nullopt;
      }
      per_axis[c.space.pivots()[r]] = c.degree;
    }
  }
  std::vector<Degree> out;
  for (auto& d : per_axis) {
    if (!d) return std::nullopt;
    out.push_back(std::move(*d));
  }
  return out;
}

std::optional<GradingViolation> find_grading_violation(const LieAlgebra& g, const Grading& grading) {
  const std::size_t n = g.dim();
  std::size_t total = 0;
  std::vector<Vector> all;
  for (const auto& c : grading.components()) {
    if (c.space.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "grading component ambient dimension");
    total += c.space.dim();
    auto vs = c.space.basis_vectors();
    all.insert(all.end(), vs.begin(), vs.end());
  }
  const Subspace spanned = Subspace::span(n, all);
  if (total != n || !spanned.is_full()) {
    return GradingViolation{{}, {}, "components are not a direct sum spanning the algebra (dimensions sum to " +
                                        std::to_string(total) + ", span has dimension " +
                                        std::to_string(spanned.dim()) + ", algebra has " + std::to_string(n) + ")"};
  }
  for (const auto& a : grading.components()) {
    for (const auto& b : grading.components()) {
      if (b.degree < a.degree) continue;
      const Subspace product = bracket_subspaces(g, a.space, b.space);
      if (product.is_zero()) continue;
      const Degree target = a.degree + b.degree;
      const Subspace* lands = grading.component(target);
      if (lands == nullptr || !lands->contains(product)) {
        return GradingViolation{a.degree, b.degree,
                                "[g_" + to_string(a.degree) + ", g_" + to_string(b.degree) +
                                    "] is not contained in g_" + to_string(target)};
      }
    }
  }
  return std::nullopt;
}

void validate_grading(const LieAlgebra& g, const Grading& grading) {
  if (auto v = find_grading_violation(g, grading)) throw Error(ErrorKind::NotAGrading, v->reason);
}

DerivationFamily grading_to_derivations(const LieAlgebra& g, const Grading& grading) {
  validate_grading(g, grading);
  const std::size_t n = g.dim();
  // Columns of `adapted` are the component bases in order; D_j = P diag P^-1.
  std::vector<Vector> columns;
  std::vector<const Degree*> owner;
  for (const auto& c : grading.components()) {
    for (std::size_t r = 0; r < c.space.dim(); ++r) {
      columns.push_back(c.space.basis_vector(r));
      owner.push_back(&c.degree);
    }
  }
  const Matrix adapted = Matrix::from_columns(columns, n);
  const Matrix adapted_inv = inverse(adapted);
  DerivationFamily family;
  for (std::size_t j = 0; j < grading.rank(); ++j) {
    Vector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = Rational(static_cast<long>((*owner[i])[j]));
    family.matrices.push_back(adapted * Matrix::diagonal(diag) * adapted_inv);
    family.labels.push_back("degree" + std::to_string(j));
  }
  return family;
}

Grading derivations_to_grading(const LieAlgebra& g, const DerivationFamily& family) {
  const auto pieces = joint_eigenspaces(family.matrices, g.dim());
  std::vector<GradedComponent> components;
  for (const auto& [weight, space] : pieces) {
    Degree degree;
    for (const auto& w : weight) {
      if (!is_integer(w)) {
        throw Error(ErrorKind::NonIntegerDegree, "joint weight " + to_string(weight) + " is not integral");
      }
      if (!w.get_num().fits_slong_p()) throw Error(ErrorKind::NonIntegerDegree, "joint weight out of range");
      degree.push_back(w.get_num().get_si());
    }
    components.push_back({std::move(degree), space});
  }
  return Grading(family.size(), std::move(components));
}

std::string FamilyReport::summary() const {
  std::ostringstream os;
  auto list = [&os](const char* what, const std::vector<std::size_t>& v) {
    for (auto i : v) os << "member " << i << ": " << what << "; ";
  };
  list("wrong size", wrong_size);
  list("not a derivation", not_derivation);
  for (auto [a, b] : not_commuting) os << "members " << a << " and " << b << " do not commute; ";
  list("not semisimple (minimal polynomial not squarefree)", not_semisimple);
  list("minimal polynomial does not split over Q (irrational spectrum)", irrational_spectrum);
  std::string s = os.str();
  return s.empty() ? "valid" : s.substr(0, s.size() - 2);
}

FamilyReport validate_family(const LieAlgebra& g, const DerivationFamily& family) {
  FamilyReport report;
  const std::size_t n = g.dim();
  std::vector<bool> usable(family.size(), true);
  for (std::size_t a = 0; a < family.size(); ++a) {
    const Matrix& m = family.matrices[a];
    if (!m.is_square() || m.rows() != n) {
      report.wrong_size.push_back(a);
      usable[a] = false;
      continue;
    }
    if (!is_derivation(g, m)) report.not_derivation.push_back(a);
    try {
      if (!is_semisimple_rational(m)) report.not_semisimple.push_back(a);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IrrationalSpectrum) throw;
      report.irrational_spectrum.push_back(a);
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (usable[a] && usable[b] && !commutator(family.matrices[a], family.matrices[b]).is_zero()) {
        report.not_commuting.push_back({a, b});
      }
  return report;
}

void require_valid_family(const LieAlgebra& g, const DerivationFamily& family) {
  const FamilyReport report = validate_family(g, family);
  if (report.ok()) return;
  if (!report.wrong_size.empty()) throw Error(ErrorKind::DimensionMismatch, report.summary());
  if (!report.not_derivation.empty()) throw Error(ErrorKind::NotADerivation, report.summary());
  if (!report.not_commuting.empty()) throw Error(ErrorKind::NotCommuting, report.summary());
  if (!report.not_semisimple.empty()) throw Error(ErrorKind::NotSemisimple, report.summary());
  throw Error(ErrorKind::IrrationalSpectrum, report.summary());
}

std::vector<GradedComponent> restrict_grading(const LieAlgebra& g, const Grading& grading, const Subspace& w) {
  if (w.ambient_dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "restrict_grading");
  std::vector<GradedComponent> out;
  std::size_t total = 0;
  for (const auto& c : grading.components()) {
    Subspace meet = subspace_intersection(w, c.space);
    if (meet.is_zero()) continue;
    total += meet.dim();
    out.push_back({c.degree, std::move(meet)});
  }
  if (total != w.dim()) {
    throw Error(ErrorKind::NotGraded, "subspace is not graded: homogeneous parts span " + std::to_string(total) +
                                          " of " + std::to_string(w.dim()) + " dimensions (deficit " +
                                          std::to_string(w.dim() - total) + ")");
  }
  return out;
}

}  // namespace glevi
