#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbitgf/rational.hpp"

namespace orbitgf {

/// Kernel dimensions indexed by transverse order starting at 0.
struct DimSeries {
  std::vector<long long> values;

  DimSeries() = default;
  explicit DimSeries(std::vector<long long> v) : values(std::move(v)) {}
  int size() const { return static_cast<int>(values.size()); }
  long long at(int n) const { return values.at(n); }
  bool operator==(const DimSeries& o) const { return values == o.values; }
};

/// Dense univariate polynomial over the rationals, used for generating
/// function numerators and denominator factors. Trailing zeros are trimmed;
/// the zero polynomial has an empty coefficient list.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly one();
  /// 1 - t^k.
  static UniPoly one_minus_power(int k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  Rational eval_at_one() const;

  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  /// Exact quotient, or nullopt when the division leaves a remainder.
  std::optional<UniPoly> divide_exact(const UniPoly& d) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  std::string str(const std::string& var = "t") const;

private:
  std::vector<Rational> c_;
  void trim();
};

/// The d-th cyclotomic polynomial normalized to constant term 1, so that
/// 1 - t^k equals the product over all divisors d of k.
UniPoly cyclotomic_factor(int d);

/// Rational generating function with denominator restricted to a product
/// of factors (1 - t^k). The denominator is a multiset of (k, multiplicity)
/// pairs sorted by k; canonical form has no factor (1 - t^k) dividing the
/// numerator.
struct RationalGF {
  UniPoly num;
  std::vector<std::pair<int, int>> den;

  static RationalGF zero();
  static RationalGF from_den(std::vector<std::pair<int, int>> den);
  bool is_zero() const { return num.is_zero(); }
  UniPoly den_poly() const;
  bool operator==(const RationalGF& o) const { return num == o.num && den == o.den; }
  std::string str() const;
};

/// Cancels every (1 - t^k)-shaped factor shared between numerator and
/// denominator and re-packs the denominator into the canonical multiset
/// (largest k first when re-assembling cyclotomic deficits).
RationalGF canonical_form(RationalGF gf);

/// First differences: out[0] = dims[0], out[n] = dims[n] - dims[n-1].
std::vector<long long> increments(const DimSeries& dims);

enum class ReconstructFailure { NoRecurrence, NonCyclotomicDenominator, WindowMismatch };

class ReconstructError : public std::runtime_error {
public:
  ReconstructError(ReconstructFailure kind, const std::string& what)
      : std::runtime_error(what), kind(kind) {}
  ReconstructFailure kind;
};

/// Fits a rational generating function with cyclotomic denominator to the
/// increment sequence. Candidate denominators ∏(1-t^k)^m are tried in
/// ascending total degree (parts enumerated largest-first within a degree);
/// a candidate is accepted when the implied numerator ends before the
/// withheld window, i.e. the final `window` entries are predicted exactly.
/// When no candidate fits, an unrestricted minimal linear-recurrence fit
/// distinguishes the failure kinds. For the unrestricted fit to be reliable
/// the input should satisfy length >= 2*max_den_degree + window.
RationalGF reconstruct_gf(const std::vector<long long>& incr, int max_den_degree, int window);

struct DdimResult {
  int value;     // pole order at t=1, clamped at 0
  bool clamped;  // true when the raw pole order was negative
};

DdimResult ddim(const RationalGF& gf);

class DominanceError : public std::runtime_error {
public:
  explicit DominanceError(const std::string& what) : std::runtime_error(what) {}
};

/// lim_{t->1} (1-t)^{ddim} gf(t), evaluated exactly. Requires the pole at
/// t=1 to strictly dominate every other unit-circle pole; throws
/// DominanceError otherwise.
Rational ddeg(const RationalGF& gf);

RationalGF product_gf(const RationalGF& a, const RationalGF& b);
/// Cauchy product truncated to the shorter usable length.
std::vector<long long> product_gf(const std::vector<long long>& a,
                                  const std::vector<long long>& b);

/// Series expansion of the generating function to `len` coefficients.
std::vector<Rational> gf_expand(const RationalGF& gf, int len);

std::vector<long long> prefix_sums(const std::vector<long long>& incr);

}  // namespace orbitgf
