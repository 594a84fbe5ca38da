#include <set>

#include "doctest.h"
#include "glevi/formats.hpp"
#include "glevi/levi.hpp"
#include "helpers.hpp"

using namespace glevi;
using testing::kind_of;
using testing::vec;

TEST_SUITE("catalog") {

TEST_CASE("catalog entries are valid") {
  const auto names = catalog_list();
  CHECK(names.size() >= 9);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& name : names) {
    CAPTURE(name);
    const CatalogEntry e = catalog_get(name);
    CHECK(e.name == name);
    CHECK(oracle::jacobi(oracle::tensor(e.algebra)));
    CHECK_NOTHROW(validate(e.algebra));
    CHECK_FALSE(e.gradings.empty());
    for (const auto& gr : e.gradings) CHECK_NOTHROW(validate_grading(e.algebra, gr));
    for (const auto& fam : e.derivations) {
      CHECK(validate_family(e.algebra, fam).ok());
      CHECK(fam.labels.size() == fam.size());
      const auto t = oracle::tensor(e.algebra);
      for (const auto& m : fam.matrices) CHECK(oracle::is_derivation(t, testing::rows(m)));
    }
  }
}

TEST_CASE("catalog certificates match the expected decomposition") {
  for (const auto& name : catalog_list()) {
    const CatalogEntry e = catalog_get(name);
    REQUIRE(e.expected.has_value());
    std::vector<DerivationFamily> families = e.derivations;
    for (const auto& gr : e.gradings) families.push_back(grading_to_derivations(e.algebra, gr));
    families.push_back(DerivationFamily{});
    for (std::size_t i = 0; i < families.size(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      const LeviCertificate c = invariant_levi(e.algebra, families[i]);
      CHECK(c.all_checks_pass());
      CHECK(c.radical == e.expected->radical);
      if (!families[i].empty()) CHECK(c.levi == e.expected->levi);
      else CHECK(c.levi.dim() == e.expected->levi.dim());
    }
  }
}

TEST_CASE("catalog facts") {
  const CatalogEntry sl2 = catalog_get("sl2");
  CHECK(sl2.algebra.names() == std::vector<std::string>{"h", "e", "f"});
  CHECK(oracle::killing_det_on(oracle::tensor(sl2.algebra), testing::rows(Subspace::full(3))) == -128);

  const CatalogEntry h3 = catalog_get("sl2_sd_h3");
  CHECK(h3.algebra.dim() == 6);
  CHECK(center(h3.algebra) == Subspace::coordinate(6, {5}));
  CHECK(bracket(h3.algebra, unit_vector(6, 3), unit_vector(6, 4)) == unit_vector(6, 5));

  const CatalogEntry sk = catalog_get("skewed_sl2_sd_v2");
  CHECK_FALSE(sk.expected->levi == Subspace::coordinate(5, {0, 1, 2}));

  CHECK(kind_of([] { catalog_get("e8"); }) == ErrorKind::UnknownName);
}

TEST_CASE("random instances") {
  const RandomInstance first = random_instance(0, 5);
  CHECK(first.algebra.dim() == 5);
  CHECK(first.expected_levi.dim() == 3);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CAPTURE(seed);
    const RandomInstance a = random_instance(seed, 12);
    const RandomInstance b = random_instance(seed, 12);
    CHECK(write_algebra(a.algebra) == write_algebra(b.algebra));
    CHECK(write_grading(a.grading) == write_grading(b.grading));
    CHECK(a.algebra.dim() <= 12);
    CHECK(oracle::jacobi(oracle::tensor(a.algebra)));
    CHECK_NOTHROW(validate_grading(a.algebra, a.grading));
    const LeviCertificate c = invariant_levi(a.algebra, a.family);
    CHECK(c.all_checks_pass());
    CHECK(c.levi == a.expected_levi);
  }
  CHECK_FALSE(write_algebra(random_instance(1, 12).algebra) == write_algebra(random_instance(2, 12).algebra));
}

}  // TEST_SUITE
