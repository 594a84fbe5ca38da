#include <algorithm>

#include "glevi/levi.hpp"

namespace glevi {

namespace {

bool lookup(const std::vector<std::pair<std::string, bool>>& checks, const std::string& name) {
  for (const auto& [key, ok] : checks) {
    if (key == name) return ok;
  }
  return false;
}

bool all_pass(const std::vector<std::pair<std::string, bool>>& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

}  // namespace

bool LeviCertificate::all_checks_pass() const { return all_pass(checks); }

bool VerificationReport::ok() const { return all_pass(checks); }

bool VerificationReport::passed(const std::string& name) const { return lookup(checks, name); }

VerificationReport verify_certificate(const LieAlgebra& g, const LeviCertificate& cert) {
  const std::size_t n = g.dim();
  const bool shapes = cert.levi.ambient_dim() == n && cert.radical.ambient_dim() == n;

  const bool subalgebra_ok = shapes && is_subalgebra(g, cert.levi);
  const bool killing_ok = subalgebra_ok && is_semisimple_algebra(g, cert.levi);
  const bool radical_ok = shapes && cert.radical == radical(g);
  const bool direct_ok = shapes && cert.levi.dim() + cert.radical.dim() == n &&
                         subspace_intersection(cert.levi, cert.radical).is_zero();
  bool invariant_ok = shapes;
  for (const auto& m : cert.family.matrices) {
    if (!invariant_ok) break;
    invariant_ok = m.rows() == n && m.cols() == n && is_invariant(m, cert.levi) && is_invariant(m, cert.radical);
  }

  VerificationReport report;
  report.checks = {{kCheckSubalgebra, subalgebra_ok},
                   {kCheckKilling, killing_ok},
                   {kCheckRadical, radical_ok},
                   {kCheckDirectSum, direct_ok},
                   {kCheckInvariant, invariant_ok}};
  return report;
}

}  // namespace glevi
