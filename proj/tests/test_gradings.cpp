#include "doctest.h"
#include "glevi/error.hpp"
#include "glevi/gradings.hpp"
#include "helpers.hpp"

using namespace glevi;
using testing::kind_of;
using testing::vec;

namespace {

Grading by_degrees(std::size_t rank, std::vector<Degree> ds) { return Grading::from_basis_degrees(rank, ds); }

}  // namespace

TEST_SUITE("gradings") {

TEST_CASE("grading construction") {
  const Grading g = by_degrees(1, {{2}, {0}, {2}});
  REQUIRE(g.components().size() == 2);
  CHECK(g.components()[0].degree == Degree{0});
  CHECK(g.components()[1].space == Subspace::coordinate(3, {0, 2}));
  CHECK(g.component({2}) != nullptr);
  CHECK(g.component({1}) == nullptr);
  CHECK(g.basis_degrees() == std::vector<Degree>{{2}, {0}, {2}});
  CHECK_THROWS_AS(Grading(1, {{{0}, Subspace::full(2)}, {{0}, Subspace::full(2)}}), Error);
  CHECK_THROWS_AS(by_degrees(2, {{1}}), Error);
}

TEST_CASE("validate_grading") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  CHECK_NOTHROW(validate_grading(sl2, by_degrees(1, {{0}, {0}, {0}})));
  CHECK_NOTHROW(validate_grading(sl2, by_degrees(1, {{0}, {2}, {-2}})));
  const auto bad = by_degrees(1, {{0}, {1}, {-2}});
  const auto v = find_grading_violation(sl2, bad);
  REQUIRE(v.has_value());
  CHECK(((v->m == Degree{1} && v->n == Degree{-2}) || (v->m == Degree{-2} && v->n == Degree{1})));
  CHECK(kind_of([&] { validate_grading(sl2, bad); }) == ErrorKind::NotAGrading);

  // components that do not span
  const Grading partial(1, {{{0}, Subspace::coordinate(3, {0})}});
  CHECK(kind_of([&] { validate_grading(sl2, partial); }) == ErrorKind::NotAGrading);
}

TEST_CASE("grading to derivations") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  const auto zero = grading_to_derivations(sl2, by_degrees(1, {{0}, {0}, {0}}));
  REQUIRE(zero.size() == 1);
  CHECK(zero.matrices[0].is_zero());

  const auto d = grading_to_derivations(sl2, by_degrees(1, {{0}, {2}, {-2}}));
  REQUIRE(d.size() == 1);
  CHECK(d.matrices[0] == Matrix::diagonal(vec({0, 2, -2})));

  const CatalogEntry sd = catalog_get("sl2_sd_v2");
  const auto two = grading_to_derivations(sd.algebra, sd.gradings[0]);
  REQUIRE(two.size() == 2);
  CHECK(two.matrices[0] == Matrix::diagonal(vec({0, 2, -2, 1, -1})));
  CHECK(two.matrices[1] == Matrix::diagonal(vec({0, 0, 0, 1, 1})));
  CHECK(validate_family(sd.algebra, two).ok());
  for (const auto& m : two.matrices) CHECK(oracle::is_derivation(oracle::tensor(sd.algebra), testing::rows(m)));

  CHECK(kind_of([&] { grading_to_derivations(sl2, by_degrees(1, {{0}, {1}, {-2}})); }) == ErrorKind::NotAGrading);
}

TEST_CASE("grading from a non-adapted basis") {
  const CatalogEntry sk = catalog_get("skewed_sl2_sd_v2");
  const Grading& g = sk.gradings[0];
  CHECK_FALSE(g.basis_degrees().has_value());
  const auto d = grading_to_derivations(sk.algebra, g);
  for (const auto& c : g.components()) {
    for (const auto& v : c.space.basis_vectors()) {
      for (std::size_t j = 0; j < d.size(); ++j) CHECK(d.matrices[j] * v == Rational(c.degree[j]) * v);
    }
  }
}

TEST_CASE("derivations to grading") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  const Grading zero = derivations_to_grading(sl2, DerivationFamily{{Matrix::zero(3, 3)}, {"z"}});
  REQUIRE(zero.components().size() == 1);
  CHECK(zero.components()[0].degree == Degree{0});
  CHECK(zero.components()[0].space.is_full());

  const Grading g = derivations_to_grading(sl2, DerivationFamily{{Matrix::diagonal(vec({0, 2, -2}))}, {"d"}});
  CHECK(g == by_degrees(1, {{0}, {2}, {-2}}));

  CHECK(kind_of([&] {
          derivations_to_grading(LieAlgebra::abelian(3),
                                 DerivationFamily{{Matrix::diagonal(vec({Rational(1, 2), 0, 0}))}, {"half"}});
        }) == ErrorKind::NonIntegerDegree);
  CHECK(kind_of([&] {
          derivations_to_grading(LieAlgebra::abelian(2), DerivationFamily{{testing::mat({{0, -1}, {1, 0}})}, {"rot"}});
        }) == ErrorKind::IrrationalSpectrum);
}

TEST_CASE("validate_family") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  const Matrix ad_h = ad_matrix(sl2, unit_vector(3, 0));
  CHECK(validate_family(sl2, DerivationFamily{{ad_h}, {"ad(h)"}}).ok());

  const Matrix ad_e = ad_matrix(sl2, unit_vector(3, 1));
  CHECK((ad_e * ad_e * ad_e).is_zero());
  const auto nil = validate_family(sl2, DerivationFamily{{ad_e}, {"ad(e)"}});
  CHECK_FALSE(nil.ok());
  CHECK(nil.not_semisimple == std::vector<std::size_t>{0});

  const auto bad = validate_family(sl2, DerivationFamily{{ad_h, Matrix::diagonal(vec({1, 0, 0}))}, {"ad(h)", "bad"}});
  CHECK(bad.not_derivation == std::vector<std::size_t>{1});
  CHECK(kind_of([&] { require_valid_family(sl2, DerivationFamily{{ad_h, Matrix::diagonal(vec({1, 0, 0}))}, {}}); }) ==
        ErrorKind::NotADerivation);

  const auto size = validate_family(sl2, DerivationFamily{{Matrix::identity(2)}, {"small"}});
  CHECK(size.wrong_size == std::vector<std::size_t>{0});

  const auto nc = validate_family(sl2, DerivationFamily{{ad_h, ad_matrix(sl2, vec({1, 1, 0}))}, {"a", "b"}});
  CHECK(nc.not_commuting.size() == 1);
}

TEST_CASE("restrict_grading") {
  const CatalogEntry sd = catalog_get("sl2_sd_v2");
  const Grading& g = sd.gradings[0];
  CHECK(restrict_grading(sd.algebra, g, Subspace::full(5)) == g.components());

  const auto l = restrict_grading(sd.algebra, g, Subspace::coordinate(5, {0, 1, 2}));
  REQUIRE(l.size() == 3);
  CHECK(l[0].degree == Degree{-2, 0});
  CHECK(l[1].degree == Degree{0, 0});
  CHECK(l[2].degree == Degree{2, 0});
  for (const auto& c : l) CHECK(c.space.dim() == 1);

  const LieAlgebra sl2 = testing::algebra("sl2");
  CHECK(kind_of([&] {
          restrict_grading(sl2, by_degrees(1, {{0}, {2}, {-2}}), testing::span(3, {vec({1, 1, 0})}));
        }) == ErrorKind::NotGraded);
}

TEST_CASE("the radical is graded") {
  for (const auto& name : catalog_list()) {
    const CatalogEntry c = catalog_get(name);
    for (const auto& g : c.gradings) CHECK_NOTHROW(restrict_grading(c.algebra, g, radical(c.algebra)));
  }
}

}  // TEST_SUITE
