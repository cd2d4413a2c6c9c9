#include <doctest.h>

#include <random>

#include "orbitgf/matrix.hpp"
#include "orbitgf/poly.hpp"
#include "orbitgf/rational.hpp"

using namespace orbitgf;

namespace {

// rank by plain rational elimination, columns processed right-to-left with
// first-nonzero pivoting; independent of the library's elimination path
int rank_independent(const QMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<Rational> row(m.cols(), Rational(0));
    for (const auto& [c, v] : m.row(r)) row[c] = v;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int c = m.cols() - 1; c >= 0; --c) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][c].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (int j = 0; j < m.cols(); ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg,
                      int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-5, 5);
  MultiPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size());
    int budget = deg(rng);
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      e[i] = part(rng);
      budget -= e[i];
    }
    p.add_term(e, Rational(coeff(rng)));
  }
  return p;
}

QMatrix random_sparse(std::mt19937& rng, int rows, int cols, int per_row) {
  std::uniform_int_distribution<int> col(0, cols - 1);
  std::uniform_int_distribution<int> val(-9, 9);
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < per_row; ++k) m.set(r, col(rng), Rational(val(rng)));
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("exact");

TEST_CASE("rational basics") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("-12").str() == "-12");
  CHECK(Rational(Integer(4), Integer(-6)).str() == "-2/3");  // denominator sign normalized
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1) / Rational(-4) == Rational(-1, 4));
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("grlex ordering and monomial enumeration") {
  GrlexLess less;
  CHECK(less({0, 0}, {0, 1}));
  CHECK(less({0, 1}, {1, 0}));
  CHECK(less({1, 0}, {0, 2}));
  auto mons = monomials_up_to(2, 2);
  REQUIRE(mons.size() == 6);
  CHECK(mons[0] == Exponents{0, 0});
  CHECK(mons[1] == Exponents{0, 1});
  CHECK(mons[2] == Exponents{1, 0});
  CHECK(mons[3] == Exponents{0, 2});
  CHECK(mons[4] == Exponents{1, 1});
  CHECK(mons[5] == Exponents{2, 0});
  CHECK(monomials_up_to(4, 10).size() == 1001);  // C(14,4)
}

TEST_CASE("poly_mul examples") {
  const std::vector<std::string> xv = {"x"};
  MultiPoly one = MultiPoly::constant(xv, Rational(1));
  MultiPoly x = MultiPoly::variable(xv, 0);
  MultiPoly p = x * x + x.scaled(Rational(3)) + one;  // x^2+3x+1

  CHECK(poly_mul(one, p) == p);  // identity

  MultiPoly xm1 = x + MultiPoly::constant(xv, Rational(-1));
  MultiPoly xp1 = x + one;
  MultiPoly diff = poly_mul(xm1, xp1);  // x^2 - 1
  MultiPoly expect(xv);
  expect.add_term({2}, Rational(1));
  expect.add_term({0}, Rational(-1));
  CHECK(diff == expect);

  // (a+2b)^2 = a^2 + 4ab + 4b^2, expanded by hand
  const std::vector<std::string> ab = {"a", "b"};
  MultiPoly s(ab);
  s.add_term({1, 0}, Rational(1));
  s.add_term({0, 1}, Rational(2));
  MultiPoly sq = poly_mul(s, s);
  MultiPoly sq_expect(ab);
  sq_expect.add_term({2, 0}, Rational(1));
  sq_expect.add_term({1, 1}, Rational(4));
  sq_expect.add_term({0, 2}, Rational(4));
  CHECK(sq == sq_expect);

  MultiPoly other({"x", "y"});
  CHECK_THROWS_AS(poly_mul(p, other), std::invalid_argument);
}

TEST_CASE("poly degree law and ring axioms on random instances") {
  std::mt19937 rng(12345);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly p = random_poly(rng, vars, 3, 3);
    MultiPoly q = random_poly(rng, vars, 3, 3);
    MultiPoly r = random_poly(rng, vars, 2, 2);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("poly substitute and eval agree") {
  std::mt19937 rng(777);
  const std::vector<std::string> vars = {"x", "y"};
  const std::vector<std::string> uvars = {"u"};
  MultiPoly p = random_poly(rng, vars, 3, 4);
  MultiPoly u = MultiPoly::variable(uvars, 0);
  // x -> 2u+1, y -> u-3
  std::vector<MultiPoly> images = {
      u.scaled(Rational(2)) + MultiPoly::constant(uvars, Rational(1)),
      u + MultiPoly::constant(uvars, Rational(-3))};
  MultiPoly comp = p.substitute(images);
  for (int t = -2; t <= 2; ++t) {
    Rational tv(t);
    CHECK(comp.eval({tv}) == p.eval({Rational(2) * tv + Rational(1), tv - Rational(3)}));
  }
}

TEST_CASE("laurent truncated product") {
  const std::vector<std::string> xv = {"x"};
  LaurentPoly p(xv);
  p.add_term({1}, Rational(1));
  p.add_term({-1}, Rational(1));  // x + 1/x

  LaurentPoly sq = laurent_mul_truncated(p, p, ExpBox::centered(1, 2));
  LaurentPoly sq_expect(xv);
  sq_expect.add_term({2}, Rational(1));
  sq_expect.add_term({0}, Rational(2));
  sq_expect.add_term({-2}, Rational(1));
  CHECK(sq == sq_expect);

  LaurentPoly truncated = laurent_mul_truncated(p, p, ExpBox::centered(1, 1));
  LaurentPoly two = LaurentPoly::constant(xv, Rational(2));
  CHECK(truncated == two);

  LaurentPoly one = LaurentPoly::constant(xv, Rational(1));
  CHECK(laurent_mul_truncated(p, one, ExpBox::centered(1, 3)) == p);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(QMatrix::identity(3)).empty());

  auto z = nullspace(QMatrix(2, 3));
  REQUIRE(z.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(z[i][j] == (i == j ? Rational(1) : Rational(0)));

  QMatrix m = QMatrix::from_dense({{Rational(1), Rational(2), Rational(3)},
                                   {Rational(2), Rational(4), Rational(6)}});
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 2);
  // frozen from a hand row reduction: x0 = -2 x1 - 3 x2
  CHECK(basis[0] == std::vector<Rational>{Rational(-2), Rational(1), Rational(0)});
  CHECK(basis[1] == std::vector<Rational>{Rational(-3), Rational(0), Rational(1)});
}

TEST_CASE("nullspace properties on random sparse matrices") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    QMatrix m = random_sparse(rng, 12, 9, 3);
    auto basis = nullspace(m);
    CHECK(static_cast<int>(basis.size()) + rank_independent(m) == m.cols());
    CHECK(rank(m) == rank_independent(m));
    for (const auto& v : basis) {
      for (const auto& r : m.mul_vec(v)) CHECK(r.is_zero());
      Integer content = 0;
      for (const auto& x : v) {
        CHECK(x.is_integer());
        content = gcd(content, x.num());
      }
      CHECK(content == 1);
    }
  }
}

TEST_CASE("serial and parallel nullspace are bitwise identical") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix m = random_sparse(rng, 30, 24, 4);
    CHECK(nullspace(m) == nullspace_serial(m));
  }
}

TEST_CASE("linear_solve") {
  QMatrix a = QMatrix::from_dense({{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}});
  auto x = linear_solve(a, {Rational(5), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));

  QMatrix inc = QMatrix::from_dense({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
  CHECK(!linear_solve(inc, {Rational(1), Rational(3)}).has_value());
  CHECK(linear_solve(inc, {Rational(1), Rational(2)}).has_value());
}

TEST_SUITE_END();
