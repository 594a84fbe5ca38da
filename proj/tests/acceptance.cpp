// Prints one PASS/FAIL line per acceptance criterion; exit status is nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glevi/catalog.hpp"
#include "glevi/derivation_split.hpp"
#include "glevi/error.hpp"
#include "glevi/formats.hpp"
#include "glevi/levi.hpp"

using namespace glevi;

namespace {

struct Instance {
  std::string name;
  LieAlgebra algebra;
  DerivationFamily family;
  std::optional<Grading> grading;
};

std::size_t depth_cap_hits = 0;

// Runs f, turning exceptions into a failure message; DepthCapExceeded is also counted.
bool guarded(const std::function<bool(std::string&)>& f, std::string& detail) {
  try {
    return f(detail);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DepthCapExceeded) ++depth_cap_hits;
    detail = std::string(error_name(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  return false;
}

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail) {
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << title;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<Instance> catalog_instances() {
  std::vector<Instance> out;
  for (const auto& name : catalog_list()) {
    const CatalogEntry e = catalog_get(name);
    for (std::size_t i = 0; i < e.gradings.size(); ++i) {
      out.push_back({name + "/grading" + std::to_string(i), e.algebra, grading_to_derivations(e.algebra, e.gradings[i]),
                     e.gradings[i]});
    }
    for (std::size_t i = 0; i < e.derivations.size(); ++i) {
      out.push_back({name + "/derivations" + std::to_string(i), e.algebra, e.derivations[i], std::nullopt});
    }
  }
  return out;
}

std::vector<Instance> random_instances() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomInstance r = random_instance(seed, 12);
    out.push_back({"random/" + std::to_string(seed), r.algebra, r.family, r.grading});
  }
  return out;
}

std::string serialize(const RandomInstance& r) {
  return write_algebra(r.algebra) + write_grading(r.grading) + write_derivations(r.family) +
         write_radical(r.expected_levi);
}

}  // namespace

int main() {
  const std::vector<Instance> catalog = catalog_instances();
  const std::vector<Instance> randoms = random_instances();
  std::vector<Instance> all = catalog;
  all.insert(all.end(), randoms.begin(), randoms.end());

  std::map<std::string, LeviCertificate> certs;
  auto cert_of = [&](const Instance& inst) -> const LeviCertificate& {
    auto it = certs.find(inst.name);
    if (it == certs.end()) it = certs.emplace(inst.name, invariant_levi(inst.algebra, inst.family)).first;
    return it->second;
  };

  {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    const bool ok = guarded(
        [&](std::string& d) {
          for (const auto& inst : catalog) {
            if (!cert_of(inst).all_checks_pass() || !verify_certificate(inst.algebra, cert_of(inst)).ok()) {
              d = inst.name + " fails a check";
              return false;
            }
          }
          return true;
        },
        detail);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << catalog_list().size() << " entries, " << catalog.size() << " families, " << secs << " s";
    if (!detail.empty()) d << "; " << detail;
    report(1, "catalog certificates pass all five checks in under 10 s", ok && secs < 10 && catalog_list().size() >= 9,
           d.str());
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          const LieAlgebra g = catalog_get("sl2_sd_v2").algebra;
          const Subspace sl2 = Subspace::coordinate(5, {0, 1, 2});
          const Subspace l = apply(Matrix::identity(5) + ad_matrix(g, unit_vector(5, 3)), sl2);
          const Case2bCorrection c = case2b_correct(g, l, Subspace::coordinate(5, {3, 4}), unit_vector(5, 0));
          d = "X = " + to_string(c.x);
          const Matrix expected = Matrix::from_rows({unit_vector(5, 0), unit_vector(5, 1), unit_vector(5, 2)}, 5);
          return c.x == -unit_vector(5, 3) && c.corrected_levi.basis() == expected;
        },
        detail);
    report(2, "Case 2b worked example gives X = -vp and span{h,e,f}", ok, detail);
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          const CatalogEntry sk = catalog_get("skewed_sl2_sd_v2");
          bool all = true;
          for (const auto& fam : sk.derivations) {
            LeviCertificate classical;
            classical.levi = classical_levi(sk.algebra);
            classical.radical = radical(sk.algebra);
            classical.family = fam;
            const VerificationReport rc = verify_certificate(sk.algebra, classical);
            const LeviCertificate inv = invariant_levi(sk.algebra, fam);
            all = all && !rc.passed(kCheckInvariant) && inv.all_checks_pass();
          }
          d = std::to_string(sk.derivations.size()) + " families";
          return all;
        },
        detail);
    report(3, "skewed entry: classical Levi fails invariance, invariant Levi passes", ok, detail);
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          std::size_t verified = 0, deterministic = 0, max_dim = 0;
          for (std::uint64_t seed = 0; seed < 100; ++seed) {
            if (serialize(random_instance(seed, 12)) == serialize(random_instance(seed, 12))) ++deterministic;
          }
          for (const auto& inst : randoms) {
            max_dim = std::max(max_dim, inst.algebra.dim());
            if (verify_certificate(inst.algebra, cert_of(inst)).ok()) ++verified;
          }
          d = std::to_string(verified) + "/100 verify, " + std::to_string(deterministic) + "/100 deterministic, max dim " +
              std::to_string(max_dim);
          return verified == 100 && deterministic == 100 && max_dim <= 12;
        },
        detail);
    report(4, "100 random instances verify and regenerate identically", ok, detail);
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          std::size_t checked = 0;
          for (const auto& inst : all) {
            if (inst.family.empty()) continue;
            const LeviCertificate& c = cert_of(inst);
            if (!c.extension || !c.extension->levi_in_g || !c.extension->radical_restricts) {
              d = inst.name;
              return false;
            }
            // recompute g cap radical(g1) here
            const ExtensionData ext = semidirect_extend(inst.algebra, inst.family);
            const Subspace r1 = radical(ext.algebra);
            const Subspace in_g = subspace_intersection(r1, image(ext.inclusion.matrix));
            std::vector<Vector> back;
            for (const auto& v : in_g.basis_vectors()) back.emplace_back(v.begin(), v.begin() + inst.algebra.dim());
            if (!(Subspace::span(inst.algebra.dim(), back) == radical(inst.algebra))) {
              d = inst.name + ": g cap r1 != r";
              return false;
            }
            ++checked;
          }
          d = std::to_string(checked) + " instances";
          return checked > 0;
        },
        detail);
    report(5, "extension facts: Levi inside g and g cap radical(g1) = radical(g)", ok, detail);
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          std::size_t checked = 0;
          for (const auto& inst : all) {
            if (!inst.grading) continue;
            const GradedLevi gl = graded_levi(inst.algebra, *inst.grading);
            std::size_t ls = 0, rs = 0;
            for (const auto& c : gl.levi_components) ls += c.space.dim();
            for (const auto& c : gl.radical_components) rs += c.space.dim();
            for (const auto& c : gl.levi_components) {
              const Subspace* gm = inst.grading->component(c.degree);
              if (gm == nullptr || !(subspace_intersection(gl.certificate.levi, *gm) == c.space)) ls = SIZE_MAX;
            }
            if (ls != gl.certificate.levi.dim() || rs != gl.certificate.radical.dim()) {
              d = inst.name;
              return false;
            }
            ++checked;
          }
          d = std::to_string(checked) + " graded instances";
          return checked > 0;
        },
        detail);
    report(6, "graded Levi and radical are sums of their homogeneous parts", ok, detail);
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          std::size_t checked = 0;
          for (const auto& inst : all) {
            const LieAlgebra& g = inst.algebra;
            const LeviCertificate& c = cert_of(inst);
            const SplitResult s = split_family(g, c);
            if (s.splits.size() != inst.family.size()) return false;
            std::vector<Matrix> inner, outer;
            for (std::size_t i = 0; i < s.splits.size(); ++i) {
              inner.push_back(ad_matrix(g, s.splits[i].h_levi));
              outer.push_back(s.splits[i].residual);
              if (!(inner.back() + outer.back() == inst.family.matrices[i]) || !c.levi.contains(s.splits[i].h_levi)) {
                d = inst.name + ": reconstruction";
                return false;
              }
            }
            for (std::size_t i = 0; i < inner.size(); ++i) {
              for (std::size_t j = 0; j < inner.size(); ++j) {
                if (!commutator(inner[i], inner[j]).is_zero() || !commutator(outer[i], outer[j]).is_zero() ||
                    !commutator(inner[i], outer[j]).is_zero()) {
                  d = inst.name + ": commutator";
                  return false;
                }
              }
              for (const auto& b : c.levi.basis_vectors()) {
                if (!commutator(outer[i], ad_matrix(g, b)).is_zero()) {
                  d = inst.name + ": residual against ad(levi)";
                  return false;
                }
              }
            }
            ++checked;
          }
          d = std::to_string(checked) + " instances";
          return checked == all.size();
        },
        detail);
    report(7, "derivations split as inner plus residual with vanishing commutators", ok, detail);
  }

  {
    std::string detail;
    const bool ok = guarded(
        [&](std::string& d) {
          std::size_t same = 0;
          for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const RandomInstance r = random_instance(1000 + seed, 12);
            if (derivations_to_grading(r.algebra, grading_to_derivations(r.algebra, r.grading)) == r.grading) ++same;
          }
          d = std::to_string(same) + "/50";
          return same == 50;
        },
        detail);
    report(8, "grading -> derivations -> grading is the identity", ok, detail);
  }

  {
    std::size_t deepest = 0;
    bool within = true;
    for (const auto& [name, c] : certs) {
      for (const auto& step : c.trace) deepest = std::max(deepest, step.depth);
      for (const auto& step : c.trace) {
        if (step.depth > depth_cap(c.levi.ambient_dim(), c.family.size())) within = false;
      }
    }
    std::ostringstream d;
    d << depth_cap_hits << " cap errors, deepest step " << deepest << " over " << certs.size() << " certificates";
    report(9, "recursion depth cap never reached", depth_cap_hits == 0 && within, d.str());
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
