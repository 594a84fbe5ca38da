#include "glevi/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "glevi/error.hpp"

namespace glevi {

namespace {

using Terms = std::vector<StructureConstant>;

void add_sl2(Terms& t, std::size_t h, std::size_t e, std::size_t f) {
  t.push_back({h, e, e, 2});
  t.push_back({h, f, f, -2});
  t.push_back({e, f, h, 1});
}

// sl2 at (h, e, f) acting on V(n) with basis u_0..u_n at `first`:
// h u_k = (n - 2k) u_k, e u_k = k u_{k-1}, f u_k = (n - k) u_{k+1}.
void add_module(Terms& t, std::size_t h, std::size_t e, std::size_t f, std::size_t first, long n) {
  for (long k = 0; k <= n; ++k) {
    const std::size_t u = first + static_cast<std::size_t>(k);
    if (n - 2 * k != 0) t.push_back({h, u, u, Rational(n - 2 * k)});
    if (k > 0) t.push_back({e, u, u - 1, Rational(k)});
    if (k < n) t.push_back({f, u, u + 1, Rational(n - k)});
  }
}

Subspace axes(std::size_t n, std::vector<std::size_t> idx) { return Subspace::coordinate(n, idx); }

std::vector<Degree> degrees1(std::initializer_list<std::int64_t> ds) {
  std::vector<Degree> out;
  for (auto d : ds) out.push_back({d});
  return out;
}

CatalogEntry abelian3() {
  CatalogEntry c;
  c.name = "abelian3";
  c.algebra = LieAlgebra::abelian(3);
  c.gradings = {Grading::from_basis_degrees(1, degrees1({1, 2, 3}))};
  c.expected = ExpectedDecomposition{Subspace::zero(3), Subspace::full(3)};
  c.notes = "abelian, radical is everything";
  return c;
}

CatalogEntry heisenberg3() {
  CatalogEntry c;
  c.name = "heisenberg3";
  c.algebra = LieAlgebra({"x", "y", "z"}, {{0, 1, 2, 1}});
  c.gradings = {Grading::from_basis_degrees(1, degrees1({1, 1, 2})),
                Grading::from_basis_degrees(2, {{1, 0}, {0, 1}, {1, 1}})};
  c.expected = ExpectedDecomposition{Subspace::zero(3), Subspace::full(3)};
  c.notes = "nilpotent, [x,y] = z";
  return c;
}

CatalogEntry sl2() {
  CatalogEntry c;
  c.name = "sl2";
  Terms t;
  add_sl2(t, 0, 1, 2);
  c.algebra = LieAlgebra({"h", "e", "f"}, t);
  c.gradings = {Grading::from_basis_degrees(1, degrees1({0, 2, -2}))};
  c.expected = ExpectedDecomposition{Subspace::full(3), Subspace::zero(3)};
  c.notes = "simple";
  return c;
}

CatalogEntry so3() {
  CatalogEntry c;
  c.name = "so3";
  c.algebra = LieAlgebra({"x", "y", "z"}, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}});
  c.gradings = {Grading::from_basis_degrees(1, degrees1({0, 0, 0}))};
  c.expected = ExpectedDecomposition{Subspace::full(3), Subspace::zero(3)};
  c.notes = "simple, no rational split torus; only the trivial grading";
  return c;
}

CatalogEntry gl2() {
  CatalogEntry c;
  c.name = "gl2";
  Terms t;
  add_sl2(t, 0, 1, 2);
  c.algebra = LieAlgebra({"h", "e", "f", "I"}, t);
  c.gradings = {Grading::from_basis_degrees(1, degrees1({0, 2, -2, 0})),
                Grading::from_basis_degrees(2, {{0, 0}, {2, 0}, {-2, 0}, {0, 1}})};
  c.derivations = {DerivationFamily{{ad_matrix(c.algebra, unit_vector(4, 0))}, {"ad(h)"}}};
  c.expected = ExpectedDecomposition{axes(4, {0, 1, 2}), axes(4, {3})};
  c.notes = "radical is the centre";
  return c;
}

LieAlgebra sl2_v2_algebra() {
  Terms t;
  add_sl2(t, 0, 1, 2);
  add_module(t, 0, 1, 2, 3, 1);
  return LieAlgebra({"h", "e", "f", "vp", "vm"}, t);
}

Matrix scale_on(std::size_t n, std::size_t from) {
  Vector d(n, Rational(0));
  for (std::size_t i = from; i < n; ++i) d[i] = 1;
  return Matrix::diagonal(d);
}

CatalogEntry sl2_sd_v2() {
  CatalogEntry c;
  c.name = "sl2_sd_v2";
  c.algebra = sl2_v2_algebra();
  c.gradings = {Grading::from_basis_degrees(2, {{0, 0}, {2, 0}, {-2, 0}, {1, 1}, {-1, 1}}),
                Grading::from_basis_degrees(1, degrees1({0, 2, -2, 1, -1}))};
  c.derivations = {DerivationFamily{{ad_matrix(c.algebra, unit_vector(5, 0)), scale_on(5, 3)}, {"ad(h)", "scale"}},
                   DerivationFamily{{scale_on(5, 3)}, {"scale"}}};
  c.expected = ExpectedDecomposition{axes(5, {0, 1, 2}), axes(5, {3, 4})};
  c.notes = "sl2 acting on its standard module; scale is outer";
  return c;
}

CatalogEntry skewed_sl2_sd_v2() {
  const CatalogEntry base = sl2_sd_v2();
  CatalogEntry c;
  c.name = "skewed_sl2_sd_v2";
  c.algebra = base.algebra;
  const Matrix t = Matrix::identity(5) + ad_matrix(c.algebra, unit_vector(5, 3));
  const Matrix t_inv = inverse(t);
  for (const auto& grading : base.gradings) {
    std::vector<GradedComponent> moved;
    for (const auto& comp : grading.components()) moved.push_back({comp.degree, apply(t_inv, comp.space)});
    c.gradings.emplace_back(grading.rank(), std::move(moved));
  }
  for (const auto& family : base.derivations) {
    DerivationFamily moved{{}, family.labels};
    for (const auto& m : family.matrices) moved.matrices.push_back(t_inv * m * t);
    c.derivations.push_back(std::move(moved));
  }
  c.expected = ExpectedDecomposition{apply(t_inv, axes(5, {0, 1, 2})), axes(5, {3, 4})};
  c.notes = "sl2_sd_v2 with grading and derivations moved by (1 + ad vp)^-1; the coordinate sl2 is not invariant";
  return c;
}

CatalogEntry sl2_sd_h3() {
  CatalogEntry c;
  c.name = "sl2_sd_h3";
  Terms t;
  add_sl2(t, 0, 1, 2);
  add_module(t, 0, 1, 2, 3, 1);
  t.push_back({3, 4, 5, 1});
  c.algebra = LieAlgebra({"h", "e", "f", "vp", "vm", "z"}, t);
  c.gradings = {Grading::from_basis_degrees(2, {{0, 0}, {2, 0}, {-2, 0}, {1, 1}, {-1, 1}, {0, 2}})};
  const Matrix weight = Matrix::diagonal({0, 0, 0, 1, 1, 2});
  c.derivations = {DerivationFamily{{ad_matrix(c.algebra, unit_vector(6, 0)), weight}, {"ad(h)", "weight"}}};
  c.expected = ExpectedDecomposition{axes(6, {0, 1, 2}), axes(6, {3, 4, 5})};
  c.notes = "sl2 acting on the Heisenberg algebra; [r,r] = span{z}";
  return c;
}

CatalogEntry upper_triangular3() {
  CatalogEntry c;
  c.name = "upper_triangular3";
  // E11 E22 E33 E12 E13 E23
  const std::vector<std::pair<int, int>> idx = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
  c.algebra = LieAlgebra::from_basis_brackets({"E11", "E22", "E33", "E12", "E13", "E23"}, [&](std::size_t a, std::size_t b) {
    Vector out(6, Rational(0));
    auto add = [&](int i, int j, int s) {
      for (std::size_t m = 0; m < 6; ++m) {
        if (idx[m] == std::make_pair(i, j)) out[m] += s;
      }
    };
    const auto [i, j] = idx[a];
    const auto [k, l] = idx[b];
    if (j == k) add(i, l, 1);
    if (l == i) add(k, j, -1);
    return out;
  });
  c.gradings = {Grading::from_basis_degrees(1, degrees1({0, 0, 0, 1, 2, 1})),
                Grading::from_basis_degrees(2, {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  c.expected = ExpectedDecomposition{Subspace::zero(6), Subspace::full(6)};
  c.notes = "solvable";
  return c;
}

CatalogEntry sl2_sd_sym2() {
  CatalogEntry c;
  c.name = "sl2_sd_sym2";
  Terms t;
  add_sl2(t, 0, 1, 2);
  add_module(t, 0, 1, 2, 3, 2);
  c.algebra = LieAlgebra({"h", "e", "f", "u0", "u1", "u2"}, t);
  c.gradings = {Grading::from_basis_degrees(2, {{0, 0}, {2, 0}, {-2, 0}, {2, 1}, {0, 1}, {-2, 1}})};
  c.derivations = {DerivationFamily{{ad_matrix(c.algebra, unit_vector(6, 0)), scale_on(6, 3)}, {"ad(h)", "scale"}}};
  c.expected = ExpectedDecomposition{axes(6, {0, 1, 2}), axes(6, {3, 4, 5})};
  c.notes = "sl2 acting on its adjoint-dimension module V(2); zero weight in the radical";
  return c;
}

const std::vector<std::pair<std::string, CatalogEntry (*)()>>& builders() {
  static const std::vector<std::pair<std::string, CatalogEntry (*)()>> table = {
      {"abelian3", abelian3},
      {"heisenberg3", heisenberg3},
      {"sl2", sl2},
      {"so3", so3},
      {"gl2", gl2},
      {"sl2_sd_v2", sl2_sd_v2},
      {"skewed_sl2_sd_v2", skewed_sl2_sd_v2},
      {"sl2_sd_h3", sl2_sd_h3},
      {"upper_triangular3", upper_triangular3},
      {"sl2_sd_sym2", sl2_sd_sym2},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& [name, build] : builders()) names.push_back(name);
  return names;
}

CatalogEntry catalog_get(std::string_view name) {
  for (const auto& [key, build] : builders()) {
    if (key == name) return build();
  }
  throw Error(ErrorKind::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

// ---- random instances ------------------------------------------------------

namespace {

struct Module {
  std::size_t block;
  long n;
  std::size_t first;
  std::int64_t weight;
};

Rational binomial(long n, long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Matrix exp_nilpotent(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix out = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (Rational(1) / Rational(static_cast<long>(k))) * (term * a);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, std::size_t max_dim) {
  if (max_dim < 3) throw Error(ErrorKind::PreconditionViolated, "max_dim must be at least 3");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<long>(rng() % bound); };

  const std::size_t blocks = (max_dim >= 8 && draw(3) == 0) ? 2 : 1;
  std::vector<std::string> names;
  Terms terms;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::string tag = blocks == 1 ? "" : std::to_string(b + 1);
    names.insert(names.end(), {"h" + tag, "e" + tag, "f" + tag});
    add_sl2(terms, 3 * b, 3 * b + 1, 3 * b + 2);
  }
  const std::size_t levi_dim = names.size();

  std::vector<Module> modules;
  std::size_t budget = max_dim - levi_dim;
  if (budget >= 2) {
    const long n = 1 + draw(std::min<std::size_t>(budget - 1, 3));
    modules.push_back({static_cast<std::size_t>(draw(blocks)), n, 0, 1 + draw(3)});
    budget -= static_cast<std::size_t>(n + 1);
    while (budget >= 1 && draw(3) != 0) {
      const long m = draw(std::min<std::size_t>(budget, 4));
      modules.push_back({static_cast<std::size_t>(draw(blocks)), m, 0, 1 + draw(3)});
      budget -= static_cast<std::size_t>(m + 1);
    }
  }
  for (std::size_t i = 0; i < modules.size(); ++i) {
    auto& mod = modules[i];
    mod.first = names.size();
    for (long k = 0; k <= mod.n; ++k) names.push_back("u" + std::to_string(i) + "_" + std::to_string(k));
    const std::size_t h = 3 * mod.block;
    add_module(terms, h, h + 1, h + 2, mod.first, mod.n);
  }
  std::optional<std::size_t> centre;
  if (!modules.empty() && modules[0].n % 2 == 1 && budget >= 1 && draw(2) == 0) {
    centre = names.size();
    names.push_back("z");
    const auto& mod = modules[0];
    for (long k = 0; 2 * k < mod.n; ++k) {
      Rational c = Rational(k % 2 == 0 ? 1 : -1) / binomial(mod.n, k);
      terms.push_back({mod.first + static_cast<std::size_t>(k), mod.first + static_cast<std::size_t>(mod.n - k), *centre, c});
    }
  }
  const std::size_t dim = names.size();
  const LieAlgebra base(names, terms);

  // Basis degrees: (total h-weight, module weight).
  std::vector<std::int64_t> h_weight(dim, 0), w_weight(dim, 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    h_weight[3 * b + 1] = 2;
    h_weight[3 * b + 2] = -2;
  }
  for (const auto& mod : modules) {
    for (long k = 0; k <= mod.n; ++k) {
      h_weight[mod.first + static_cast<std::size_t>(k)] = mod.n - 2 * k;
      w_weight[mod.first + static_cast<std::size_t>(k)] = mod.weight;
    }
  }
  if (centre) w_weight[*centre] = 2 * modules[0].weight;

  const long shape = draw(3);
  const std::size_t rank = shape == 0 ? 2 : 1;
  std::vector<Degree> degrees;
  for (std::size_t i = 0; i < dim; ++i) {
    if (shape == 0) degrees.push_back({h_weight[i], w_weight[i]});
    else if (shape == 1) degrees.push_back({w_weight[i]});
    else degrees.push_back({h_weight[i] + 3 * w_weight[i]});
  }
  const Grading base_grading = Grading::from_basis_degrees(rank, degrees);

  // Automorphism exp(ad X), X in the radical, then a unit-triangular basis change.
  Vector x = zero_vector(dim);
  for (std::size_t i = levi_dim; i < dim; ++i) x[i] = draw(5) - 2;
  const Matrix a = exp_nilpotent(ad_matrix(base, x));
  Matrix p = Matrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) p(i, j) = draw(3) - 1;
  }
  // New basis vector j is the old vector a p e_j; the total move is m = a p.
  const Matrix m = a * p;
  const Matrix m_inv = inverse(m);

  RandomInstance out;
  out.algebra = LieAlgebra::from_basis_brackets(names, [&](std::size_t i, std::size_t j) {
    return m_inv * bracket(base, m.column(i), m.column(j));
  });
  std::vector<GradedComponent> comps;
  for (const auto& c : base_grading.components()) comps.push_back({c.degree, apply(m_inv, c.space)});
  out.grading = Grading(rank, std::move(comps));
  out.family = grading_to_derivations(out.algebra, out.grading);
  out.expected_levi = apply(m_inv, Subspace::coordinate(dim, [&] {
                              std::vector<std::size_t> idx(levi_dim);
                              for (std::size_t i = 0; i < levi_dim; ++i) idx[i] = i;
                              return idx;
                            }()));
  return out;
}

}  // namespace glevi
