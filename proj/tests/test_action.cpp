#include <doctest.h>

#include <random>

#include "orbitgf/action.hpp"

using namespace orbitgf;

namespace {

std::vector<Rational> rv(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.push_back(Rational(x));
  return out;
}

// translations along every coordinate: constant generator fields
LieAction translations(int n) {
  LieAction a;
  for (int i = 1; i <= n; ++i) a.variables.push_back("x" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    std::vector<MultiPoly> comps(n, MultiPoly(a.variables));
    comps[i] = MultiPoly::constant(a.variables, Rational(1));
    a.generators.push_back(PolyVectorField(a.variables, std::move(comps)));
  }
  return a;
}

ComplexScenario complex_slodowy() {
  // the traceless 3x3 adjoint scenario read over the Gaussian rationals
  LieAction real = make_adjoint_sl(3);
  ComplexScenario cs;
  cs.variables = real.variables;
  for (const auto& g : real.generators) {
    ComplexVectorField f;
    f.variables = real.variables;
    for (const auto& p : g.components)
      f.components.push_back(ComplexPoly{p, MultiPoly(real.variables)});
    cs.generators.push_back(std::move(f));
  }
  cs.base.assign(8, GaussianRational{Rational(0), Rational(0)});
  cs.base[1].re = Rational(1);  // A12 = 1
  QMatrix basis(8, 4);
  basis.set(0, 0, Rational(1));
  basis.set(4, 0, Rational(1));
  basis.set(3, 1, Rational(1));
  basis.set(5, 2, Rational(1));
  basis.set(6, 3, Rational(1));
  cs.basis = ComplexMatrix{basis, QMatrix(8, 4)};
  cs.slice_variables = {"a", "b", "c", "d"};
  complete_complex_slice(cs);
  return cs;
}

}  // namespace

TEST_SUITE_BEGIN("action");

TEST_CASE("adjoint gl2 fundamental fields") {
  LieAction gl2 = make_adjoint_gl(2);
  REQUIRE(gl2.ambient_dim() == 4);
  REQUIRE(gl2.generators.size() == 4);

  // h = E11 - E22 acts as 2 A12 d/dA12 - 2 A21 d/dA21
  PolyVectorField h = fundamental_field(gl2, rv({1, 0, 0, -1}));
  CHECK(h.components[0].is_zero());
  CHECK(h.components[1] == MultiPoly::variable(gl2.variables, 1).scaled(Rational(2)));
  CHECK(h.components[2] == MultiPoly::variable(gl2.variables, 2).scaled(Rational(-2)));
  CHECK(h.components[3].is_zero());

  // zero coefficients give the zero field
  CHECK(fundamental_field(gl2, rv({0, 0, 0, 0})).is_zero());

  // the identity matrix is central: [I, A] = 0
  CHECK(fundamental_field(gl2, rv({1, 0, 0, 1})).is_zero());

  CHECK_THROWS_AS(fundamental_field(gl2, rv({1, 2})), std::invalid_argument);
}

TEST_CASE("fundamental_field is linear in the coefficients") {
  LieAction sl3 = make_adjoint_sl(3);
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> x, y, sum;
    for (std::size_t i = 0; i < sl3.generators.size(); ++i) {
      x.push_back(Rational(val(rng)));
      y.push_back(Rational(val(rng)));
      sum.push_back(x.back() + y.back() * Rational(3));
    }
    PolyVectorField fx = fundamental_field(sl3, x);
    PolyVectorField fy = fundamental_field(sl3, y);
    CHECK(fundamental_field(sl3, sum) == fx + fy.scaled(Rational(3)));
  }
}

TEST_CASE("slice_construct at a regular semisimple point of gl2") {
  LieAction gl2 = make_adjoint_gl(2);
  AffineSlice s = slice_construct(gl2, rv({1, 0, 0, -1}));
  CHECK(s.dim() == 2);
  CHECK(s.slice_variables == std::vector<std::string>{"A11", "A22"});
  // the diagonal directions complete the off-diagonal orbit tangent
  CHECK(s.basis.get(0, 0) == Rational(1));
  CHECK(s.basis.get(3, 1) == Rational(1));
  CHECK(slice_validate(gl2, s).all_pass());
}

TEST_CASE("slice_construct at a central point spans everything") {
  LieAction gl2 = make_adjoint_gl(2);
  AffineSlice s = slice_construct(gl2, rv({2, 0, 0, 2}));
  CHECK(s.dim() == 4);
  CHECK(slice_validate(gl2, s).all_pass());
}

TEST_CASE("slice_construct under a transitive infinitesimal action") {
  LieAction t3 = translations(3);
  AffineSlice s = slice_construct(t3, rv({1, 2, 3}));
  CHECK(s.dim() == 0);
  CHECK(slice_validate(t3, s).all_pass());
}

TEST_CASE("constructed slices always validate at base") {
  LieAction sl3 = make_adjoint_sl(3);
  std::vector<std::vector<Rational>> points = {
      rv({0, 1, 0, 0, 0, 0, 0, 0}),   // the subregular base point
      rv({1, 0, 0, 0, -1, 0, 0, 0}),  // semisimple
      rv({0, 0, 0, 0, 0, 0, 0, 0}),   // the origin (everything fixed)
  };
  for (const auto& p : points) {
    AffineSlice s = slice_construct(sl3, p);
    CHECK(slice_validate(sl3, s).all_pass());
  }
}

TEST_CASE("slodowy slice coordinates validate") {
  LieAction sl3 = make_adjoint_sl(3);
  std::vector<Rational> base = rv({0, 1, 0, 0, 0, 0, 0, 0});
  QMatrix basis(8, 4);
  basis.set(0, 0, Rational(1));
  basis.set(4, 0, Rational(1));
  basis.set(3, 1, Rational(1));
  basis.set(5, 2, Rational(1));
  basis.set(6, 3, Rational(1));
  AffineSlice s = make_slice(base, basis, {"a", "b", "c", "d"});
  CHECK(s.left_inverse * s.basis == QMatrix::identity(4));
  CHECK((s.complement * s.basis).nnz() == 0);
  ValidationReport rep =
      slice_validate(sl3, s, {rv({1, 0, 0, 0}), rv({0, 1, 2, 3}), rv({-1, 5, 7, 2})});
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 5);  // base submersion, dimension count, 3 samples
}

TEST_CASE("undersized slice fails the dimension count") {
  LieAction sl3 = make_adjoint_sl(3);
  std::vector<Rational> base = rv({0, 1, 0, 0, 0, 0, 0, 0});
  QMatrix basis(8, 3);  // drop the d direction: k too small
  basis.set(0, 0, Rational(1));
  basis.set(4, 0, Rational(1));
  basis.set(3, 1, Rational(1));
  basis.set(5, 2, Rational(1));
  AffineSlice s = make_slice(base, basis, {"a", "b", "c"});
  ValidationReport rep = slice_validate(sl3, s);
  CHECK(!rep.all_pass());
  bool dimension_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "dimension count" && !c.pass) dimension_failed = true;
  CHECK(dimension_failed);
}

TEST_CASE("slice inside the orbit tangent fails the submersion check") {
  LieAction gl2 = make_adjoint_gl(2);
  std::vector<Rational> base = rv({1, 0, 0, -1});
  QMatrix basis(4, 2);  // off-diagonal directions lie in the orbit tangent
  basis.set(1, 0, Rational(1));
  basis.set(2, 1, Rational(1));
  AffineSlice s = make_slice(base, basis, {"u", "v"});
  ValidationReport rep = slice_validate(gl2, s);
  CHECK(!rep.all_pass());
  CHECK(!rep.checks.front().pass);  // submersion at base
}

TEST_CASE("realify of z d/dz") {
  ComplexVectorField f;
  f.variables = {"z"};
  f.components = {ComplexPoly{MultiPoly::variable({"z"}, 0), MultiPoly({"z"})}};
  auto [v, iv] = realify_field(f);
  const std::vector<std::string> rvars = {"z_re", "z_im"};
  CHECK(v.variables == rvars);
  // x dx + y dy
  CHECK(v.components[0] == MultiPoly::variable(rvars, 0));
  CHECK(v.components[1] == MultiPoly::variable(rvars, 1));
  // -y dx + x dy
  CHECK(iv.components[0] == MultiPoly::variable(rvars, 1).scaled(Rational(-1)));
  CHECK(iv.components[1] == MultiPoly::variable(rvars, 0));
}

TEST_CASE("realify of a quadratic coefficient expands real and imaginary parts") {
  // p(z) = z^2 on one complex variable: Re = x^2 - y^2, Im = 2xy
  ComplexVectorField f;
  f.variables = {"z"};
  MultiPoly z2 = MultiPoly::monomial({"z"}, {2}, Rational(1));
  f.components = {ComplexPoly{z2, MultiPoly({"z"})}};
  auto [v, iv] = realify_field(f);
  const std::vector<std::string> rvars = {"z_re", "z_im"};
  MultiPoly expect_re(rvars), expect_im(rvars);
  expect_re.add_term({2, 0}, Rational(1));
  expect_re.add_term({0, 2}, Rational(-1));
  expect_im.add_term({1, 1}, Rational(2));
  CHECK(v.components[0] == expect_re);
  CHECK(v.components[1] == expect_im);
}

TEST_CASE("realified slodowy scenario") {
  ComplexScenario cs = complex_slodowy();
  CHECK(complex_slice_validate(cs).all_pass());

  auto [action, slice] = realify(cs);
  CHECK(action.variables.size() == 16);
  CHECK(action.generators.size() == 16);  // each complex generator doubles
  CHECK(slice.dim() == 8);                // complex dimension 4 doubles
  CHECK(slice.left_inverse * slice.basis == QMatrix::identity(8));
  CHECK((slice.complement * slice.basis).nnz() == 0);

  // validity transfers to the realified slice
  CHECK(slice_validate(action, slice).all_pass());

  // a purely real scenario realifies to the original fields plus rotations:
  // the x-part of each primary field matches the real generators
  LieAction real = make_adjoint_sl(3);
  for (std::size_t g = 0; g < real.generators.size(); ++g) {
    const PolyVectorField& doubled = action.generators[2 * g];
    for (int i = 0; i < 8; ++i) {
      // restrict to y = 0: substituting x_j for z_j_re and 0 for z_j_im
      std::vector<MultiPoly> images;
      for (int j = 0; j < 8; ++j) images.push_back(MultiPoly::variable(real.variables, j));
      for (int j = 0; j < 8; ++j) images.push_back(MultiPoly(real.variables));
      CHECK(doubled.components[i].substitute(images) == real.generators[g].components[i]);
    }
  }
}

TEST_CASE("complex slice validation catches bad slices") {
  ComplexScenario cs = complex_slodowy();
  // shrink to 3 slice directions: dimension count must fail
  QMatrix basis(8, 3);
  basis.set(0, 0, Rational(1));
  basis.set(4, 0, Rational(1));
  basis.set(3, 1, Rational(1));
  basis.set(5, 2, Rational(1));
  cs.basis = ComplexMatrix{basis, QMatrix(8, 3)};
  cs.slice_variables = {"a", "b", "c"};
  complete_complex_slice(cs);
  CHECK(!complex_slice_validate(cs).all_pass());
}

TEST_SUITE_END();
