#include "doctest.h"
#include "glevi/error.hpp"
#include "helpers.hpp"

using namespace glevi;
using testing::kind_of;
using testing::vec;

namespace {

Matrix scale_on_module() { return Matrix::diagonal(vec({0, 0, 0, 1, 1})); }

}  // namespace

TEST_SUITE("lie_core") {

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(LieAlgebra::abelian(3)));
  const LieAlgebra sl2 = testing::algebra("sl2");
  CHECK_NOTHROW(validate(sl2));
  CHECK(oracle::jacobi(oracle::tensor(sl2)));

  // [x,y]=z, [x,z]=x
  const LieAlgebra fake({"x", "y", "z"}, {{0, 1, 2, 1}, {0, 2, 0, 1}});
  CHECK_FALSE(oracle::jacobi(oracle::tensor(fake)));
  const auto v = find_jacobi_violation(fake);
  REQUIRE(v.has_value());
  const auto t = oracle::tensor(fake);
  auto e = [](std::size_t i) { return oracle::unit(3, i); };
  const Vector sum = oracle::bracket(t, e(v->i), oracle::bracket(t, e(v->j), e(v->k))) +
                     oracle::bracket(t, e(v->j), oracle::bracket(t, e(v->k), e(v->i))) +
                     oracle::bracket(t, e(v->k), oracle::bracket(t, e(v->i), e(v->j)));
  CHECK(v->value == sum);
  CHECK_FALSE(is_zero(sum));
  CHECK(kind_of([&] { validate(fake); }) == ErrorKind::NotALieAlgebra);
}

TEST_CASE("constructor stores antisymmetric constants") {
  const LieAlgebra g({"a", "b"}, {{1, 0, 1, 3}});
  CHECK(g.basis_bracket(0, 1) == vec({0, -3}));
  CHECK(g.basis_bracket(1, 0) == vec({0, 3}));
  CHECK_THROWS_AS(LieAlgebra({"a"}, {{0, 0, 0, 1}}), Error);
}

TEST_CASE("bracket and ad") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  const Vector x = vec({1, Rational(2, 3), -5});
  CHECK(is_zero(bracket(sl2, x, x)));
  CHECK(bracket(sl2, unit_vector(3, 1), unit_vector(3, 2)) == unit_vector(3, 0));
  CHECK(ad_matrix(sl2, unit_vector(3, 0)) == Matrix::diagonal(vec({0, 2, -2})));
  const Vector y = vec({-1, 4, Rational(1, 7)});
  CHECK(ad_matrix(sl2, x) * y == bracket(sl2, x, y));
  CHECK(bracket(sl2, x, y) == oracle::bracket(oracle::tensor(sl2), x, y));
  CHECK_THROWS_AS(bracket(sl2, vec({1, 0}), x), Error);
}

TEST_CASE("bracket of subspaces") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  CHECK(bracket_subspaces(sl2, Subspace::full(3), Subspace::zero(3)).is_zero());
  CHECK(bracket_subspaces(sl2, Subspace::full(3), Subspace::full(3)).is_full());
  const LieAlgebra h3 = testing::algebra("heisenberg3");
  CHECK(bracket_subspaces(h3, Subspace::full(3), Subspace::full(3)) == Subspace::coordinate(3, {2}));
}

TEST_CASE("derived and lower central series") {
  const auto ab = derived_series(LieAlgebra::abelian(2), Subspace::full(2));
  REQUIRE(ab.size() == 2);
  CHECK(ab[1].is_zero());
  CHECK(is_solvable(LieAlgebra::abelian(2), Subspace::full(2)));

  const LieAlgebra h3 = testing::algebra("heisenberg3");
  CHECK(is_solvable(h3, Subspace::full(3)));
  CHECK(is_nilpotent_algebra(h3, Subspace::full(3)));

  const LieAlgebra sl2 = testing::algebra("sl2");
  CHECK_FALSE(is_solvable(sl2, Subspace::full(3)));
  CHECK(derived_series(sl2, Subspace::full(3)).back().is_full());

  const LieAlgebra b2 = subalgebra(sl2, Subspace::coordinate(3, {0, 1})).algebra;
  CHECK(is_solvable(b2, Subspace::full(2)));
  CHECK_FALSE(is_nilpotent_algebra(b2, Subspace::full(2)));

  CHECK(kind_of([&] { derived_series(sl2, Subspace::coordinate(3, {1, 2})); }) == ErrorKind::NotASubalgebra);
}

TEST_CASE("Killing form") {
  CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());
  const LieAlgebra sl2 = testing::algebra("sl2");
  const Matrix k = killing_form(sl2);
  CHECK(k == testing::mat({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  const auto t = oracle::tensor(sl2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k(i, j) == oracle::killing(t, oracle::unit(3, i), oracle::unit(3, j)));
  CHECK(killing_form(testing::algebra("heisenberg3")).is_zero());
}

TEST_CASE("semisimplicity") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  CHECK(is_semisimple_algebra(sl2, Subspace::full(3)));
  CHECK(determinant(killing_form(sl2)) == -128);
  CHECK(oracle::det(testing::rows(killing_form(sl2))) == -128);
  CHECK_FALSE(is_semisimple_algebra(LieAlgebra::abelian(2), Subspace::full(2)));
  CHECK_FALSE(is_semisimple_algebra(testing::algebra("heisenberg3"), Subspace::full(3)));
  CHECK(is_semisimple_algebra(testing::algebra("so3"), Subspace::full(3)));
  CHECK(kind_of([&] { is_semisimple_algebra(sl2, Subspace::coordinate(3, {1, 2})); }) == ErrorKind::NotASubalgebra);
}

TEST_CASE("radical") {
  CHECK(radical(testing::algebra("sl2")).is_zero());
  CHECK(radical(testing::algebra("heisenberg3")).is_full());
  const LieAlgebra gl2 = testing::algebra("gl2");
  const Subspace r = radical(gl2);
  CHECK(r == Subspace::coordinate(4, {3}));
  // oracle: I is central and Killing-orthogonal to [g,g] = span{h,e,f}
  const auto t = oracle::tensor(gl2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(oracle::killing(t, oracle::unit(4, 3), oracle::unit(4, i)) == 0);
  CHECK(radical(LieAlgebra::abelian(0)).is_zero());
}

TEST_CASE("centre") {
  CHECK(center(LieAlgebra::abelian(3)).is_full());
  CHECK(center(testing::algebra("sl2")).is_zero());
  CHECK(center(testing::algebra("heisenberg3")) == Subspace::coordinate(3, {2}));
}

TEST_CASE("quotients") {
  const LieAlgebra h3 = testing::algebra("heisenberg3");
  const auto same = quotient(h3, Subspace::zero(3));
  CHECK(same.quotient == h3);
  CHECK(same.projection.matrix == Matrix::identity(3));

  const auto q = quotient(h3, Subspace::coordinate(3, {2}));
  CHECK(q.quotient.dim() == 2);
  CHECK(q.quotient.structure().empty());
  CHECK(q.projection.matrix * q.section.matrix == Matrix::identity(2));

  const auto g = quotient(testing::algebra("gl2"), Subspace::coordinate(4, {3}));
  CHECK(g.quotient.structure() == testing::algebra("sl2").structure());
  CHECK(is_homomorphism(testing::algebra("gl2"), g.quotient, g.projection));

  CHECK(kind_of([&] { quotient(testing::algebra("sl2"), Subspace::coordinate(3, {1})); }) == ErrorKind::NotAnIdeal);
}

TEST_CASE("subalgebras") {
  const LieAlgebra sl2 = testing::algebra("sl2");
  const auto full = subalgebra(sl2, Subspace::full(3));
  CHECK(full.algebra.structure() == sl2.structure());

  const auto borel = subalgebra(sl2, Subspace::coordinate(3, {0, 1}));
  CHECK(borel.algebra.dim() == 2);
  CHECK(borel.algebra.basis_bracket(0, 1) == vec({0, 2}));
  CHECK(is_homomorphism(borel.algebra, sl2, borel.inclusion));

  const auto line = subalgebra(sl2, Subspace::coordinate(3, {1}));
  CHECK(line.algebra.structure().empty());

  CHECK(kind_of([&] { subalgebra(sl2, Subspace::coordinate(3, {1, 2})); }) == ErrorKind::NotASubalgebra);
}

TEST_CASE("derivations") {
  const LieAlgebra sd = testing::algebra("sl2_sd_v2");
  CHECK(is_derivation(sd, Matrix::zero(5, 5)));
  CHECK(is_derivation(sd, ad_matrix(sd, vec({1, 2, -1, 3, 0}))));
  CHECK(is_derivation(sd, scale_on_module()));
  CHECK(oracle::is_derivation(oracle::tensor(sd), testing::rows(scale_on_module())));
  CHECK_FALSE(is_derivation(sd, Matrix::diagonal(vec({1, 0, 0, 0, 0}))));
}

TEST_CASE("semidirect extension") {
  const auto ab = semidirect_extend(LieAlgebra::abelian(1), DerivationFamily{{Matrix::identity(1)}, {"id"}});
  CHECK(ab.algebra.dim() == 2);
  CHECK(ab.adjoined == std::vector<std::size_t>{1});
  CHECK(ab.algebra.basis_bracket(1, 0) == vec({1, 0}));

  const LieAlgebra h3 = testing::algebra("heisenberg3");
  const auto h = semidirect_extend(h3, DerivationFamily{{Matrix::diagonal(vec({1, 1, 2}))}, {"deg"}});
  CHECK(h.algebra.dim() == 4);
  CHECK_NOTHROW(validate(h.algebra));
  CHECK(oracle::jacobi(oracle::tensor(h.algebra)));
  CHECK(is_solvable(h.algebra, Subspace::full(4)));

  const LieAlgebra sl2 = testing::algebra("sl2");
  const auto s = semidirect_extend(sl2, DerivationFamily{{ad_matrix(sl2, unit_vector(3, 0))}, {"ad(h)"}});
  CHECK(s.algebra.dim() == 4);
  CHECK(radical(s.algebra) == testing::span(4, {vec({-1, 0, 0, 1})}));
  CHECK(ad_matrix(s.algebra, vec({-1, 0, 0, 1})).is_zero());
  CHECK(s.algebra.names()[3] == "H[ad(h)]");

  // restriction along the inclusion reproduces g
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Vector in_g1 = bracket(s.algebra, s.inclusion(unit_vector(3, i)), s.inclusion(unit_vector(3, j)));
      CHECK(in_g1 == s.inclusion(sl2.basis_bracket(i, j)));
    }

  // dependent derivations are dropped
  const auto dup = semidirect_extend(
      sl2, DerivationFamily{{ad_matrix(sl2, unit_vector(3, 0)), Rational(2) * ad_matrix(sl2, unit_vector(3, 0))},
                            {"a", "b"}});
  CHECK(dup.algebra.dim() == 4);
  CHECK(dup.kept == std::vector<std::size_t>{0});

  CHECK(kind_of([&] {
          semidirect_extend(sl2, DerivationFamily{{Matrix::diagonal(vec({1, 0, 0}))}, {"bad"}});
        }) == ErrorKind::NotADerivation);
  CHECK(kind_of([&] {
          semidirect_extend(sl2, DerivationFamily{{ad_matrix(sl2, unit_vector(3, 0)), ad_matrix(sl2, unit_vector(3, 1))},
                                                  {"h", "e"}});
        }) == ErrorKind::NotCommuting);
}

}  // TEST_SUITE
