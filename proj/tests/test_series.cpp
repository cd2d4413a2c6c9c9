#include <doctest.h>

#include "orbitgf/series.hpp"

using namespace orbitgf;

namespace {

std::vector<long long> expand_ll(const RationalGF& gf, int len) {
  std::vector<long long> out;
  for (const auto& c : gf_expand(gf, len)) {
    REQUIRE(c.is_integer());
    out.push_back(c.num().get_si());
  }
  return out;
}

RationalGF gf_with_den(std::vector<std::pair<int, int>> den) {
  return RationalGF{UniPoly::one(), std::move(den)};
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("cyclotomic factors") {
  CHECK(cyclotomic_factor(1) == UniPoly({Rational(1), Rational(-1)}));
  CHECK(cyclotomic_factor(2) == UniPoly({Rational(1), Rational(1)}));
  CHECK(cyclotomic_factor(3) == UniPoly({Rational(1), Rational(1), Rational(1)}));
  CHECK(cyclotomic_factor(6) == UniPoly({Rational(1), Rational(-1), Rational(1)}));
  // 1 - t^6 = product of the cyclotomic factors over divisors of 6
  UniPoly prod = cyclotomic_factor(1) * cyclotomic_factor(2) * cyclotomic_factor(3) *
                 cyclotomic_factor(6);
  CHECK(prod == UniPoly::one_minus_power(6));
}

TEST_CASE("increments") {
  CHECK(increments(DimSeries({1, 5, 15})) == std::vector<long long>{1, 4, 10});
  CHECK(increments(DimSeries({1, 2, 4, 6, 9, 12, 16})) ==
        std::vector<long long>{1, 1, 2, 2, 3, 3, 4});
  CHECK(increments(DimSeries({7, 7, 7, 7})) == std::vector<long long>{7, 0, 0, 0});
}

TEST_CASE("gf expansion") {
  CHECK(expand_ll(gf_with_den({{1, 1}}), 5) == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(expand_ll(gf_with_den({{1, 2}}), 5) == std::vector<long long>{1, 2, 3, 4, 5});
  CHECK(expand_ll(gf_with_den({{1, 1}, {2, 1}}), 8) ==
        std::vector<long long>{1, 1, 2, 2, 3, 3, 4, 4});
}

TEST_CASE("reconstruct: geometric series") {
  RationalGF gf = reconstruct_gf(std::vector<long long>(12, 1), 6, 4);
  CHECK(gf.num == UniPoly::one());
  CHECK(gf.den == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("reconstruct: staircase increments") {
  std::vector<long long> incr;
  for (int n = 0; n < 14; ++n) incr.push_back(n / 2 + 1);  // 1,1,2,2,3,3,...
  RationalGF gf = reconstruct_gf(incr, 6, 4);
  CHECK(gf.num == UniPoly::one());
  CHECK(gf.den == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  // expansion reproduces the input over its full length
  CHECK(expand_ll(gf, 14) == incr);
}

TEST_CASE("reconstruct: binomial increments") {
  std::vector<long long> incr;
  long long c = 1;
  for (int n = 0; n < 12; ++n) {
    incr.push_back(c);
    c = c * (n + 4) / (n + 1);  // C(n+3,3)
  }
  RationalGF gf = reconstruct_gf(incr, 6, 4);
  CHECK(gf.num == UniPoly::one());
  CHECK(gf.den == std::vector<std::pair<int, int>>{{1, 4}});
}

TEST_CASE("reconstruct: eventually-zero increments give a polynomial gf") {
  std::vector<long long> incr = {3, 1, 0, 0, 0, 0, 0, 0};
  RationalGF gf = reconstruct_gf(incr, 4, 3);
  CHECK(gf.den.empty());
  CHECK(gf.num == UniPoly({Rational(3), Rational(1)}));
  DdimResult d = ddim(gf);
  CHECK(d.value == 0);
  CHECK(d.clamped == false);  // raw order is exactly 0 here (no numerator root at 1)
}

TEST_CASE("reconstruct error kinds") {
  // 2^n satisfies s_n = 2 s_{n-1}: a recurrence exists and predicts the
  // window, but (1 - 2t) is not a product of (1 - t^k) factors
  std::vector<long long> pow2 = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048};
  try {
    reconstruct_gf(pow2, 4, 4);
    CHECK(false);
  } catch (const ReconstructError& e) {
    CHECK(e.kind == ReconstructFailure::NonCyclotomicDenominator);
  }

  // factorials admit no constant-coefficient linear recurrence of low order
  std::vector<long long> fact = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800};
  try {
    reconstruct_gf(fact, 3, 4);
    CHECK(false);
  } catch (const ReconstructError& e) {
    CHECK((e.kind == ReconstructFailure::NoRecurrence ||
           e.kind == ReconstructFailure::WindowMismatch));
  }

  // fits the prefix as a constant sequence but breaks inside the window
  std::vector<long long> broken = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 7};
  try {
    reconstruct_gf(broken, 2, 4);
    CHECK(false);
  } catch (const ReconstructError& e) {
    CHECK(e.kind == ReconstructFailure::WindowMismatch);
  }
}

TEST_CASE("ddim") {
  CHECK(ddim(gf_with_den({{1, 6}})).value == 6);
  CHECK(ddim(gf_with_den({{1, 1}, {2, 1}, {3, 1}})).value == 3);

  // numerator root at t=1 cancels one pole
  RationalGF part{UniPoly::one_minus_power(1), {{1, 2}}};
  CHECK(ddim(part).value == 1);

  // pole-free gf with a numerator root at 1 reports 0 with the flag
  RationalGF poly_gf{UniPoly::one_minus_power(1), {}};
  DdimResult d = ddim(poly_gf);
  CHECK(d.value == 0);
  CHECK(d.clamped == true);
}

TEST_CASE("ddeg") {
  CHECK(ddeg(gf_with_den({{1, 6}})) == Rational(1));
  CHECK(ddeg(gf_with_den({{1, 1}, {2, 1}})) == Rational(1, 2));  // (1-t)^-2 (1+t)^-1
  CHECK(ddeg(gf_with_den({{1, 4}, {2, 2}})) == Rational(1, 4));  // (1-t)^-6 (1+t)^-2
  CHECK(ddeg(gf_with_den({{1, 2}, {2, 2}, {3, 2}})) == Rational(1, 36));
  CHECK_THROWS_AS(ddeg(gf_with_den({{2, 1}})), DominanceError);  // tie at t=-1
}

TEST_CASE("product_gf on canonical forms") {
  RationalGF a = gf_with_den({{1, 1}});
  CHECK(product_gf(a, a) == gf_with_den({{1, 2}}));

  RationalGF one{UniPoly::one(), {}};
  RationalGF s = gf_with_den({{1, 1}, {2, 1}});
  CHECK(product_gf(s, one) == s);

  // cancellation: (1-t) in the numerator against the denominator multiset
  RationalGF frac{UniPoly::one_minus_power(1), {{1, 1}, {2, 1}}};
  RationalGF canon = canonical_form(frac);
  CHECK(canon.num == UniPoly::one());
  CHECK(canon.den == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("canonical form repacks partial cyclotomic cancellations") {
  // (1+t) / (1-t^2) = 1/(1-t): the shared (1+t) factor must cancel even
  // though (1+t) is not itself of the (1-t^k) shape
  RationalGF odd{UniPoly({Rational(1), Rational(1)}), {{2, 1}}};
  RationalGF canon = canonical_form(odd);
  CHECK(canon.num == UniPoly::one());
  CHECK(canon.den == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("increment products") {
  std::vector<long long> vr = {1, 1, 2, 2, 3, 3, 4};
  CHECK(product_gf(vr, vr) == std::vector<long long>{1, 2, 5, 8, 14, 20, 30});
  std::vector<long long> ones = {1, 1, 1};
  CHECK(product_gf(vr, ones) == std::vector<long long>{1, 2, 4});
}

TEST_CASE("multiplicativity of ddim and ddeg") {
  std::vector<RationalGF> gfs = {gf_with_den({{1, 2}}), gf_with_den({{1, 1}, {2, 1}}),
                                 gf_with_den({{1, 2}, {2, 2}, {3, 2}})};
  for (const auto& a : gfs)
    for (const auto& b : gfs) {
      RationalGF p = product_gf(a, b);
      CHECK(ddim(p).value == ddim(a).value + ddim(b).value);
      CHECK(ddeg(p) == ddeg(a) * ddeg(b));
    }
}

TEST_CASE("reconstruction closes the loop on kernel-shaped data") {
  std::vector<long long> incr = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6};
  RationalGF gf = reconstruct_gf(incr, 12, 4);
  CHECK(expand_ll(gf, static_cast<int>(incr.size())) == incr);
}

TEST_SUITE_END();
