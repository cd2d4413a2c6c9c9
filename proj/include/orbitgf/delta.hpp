#pragma once

#include <map>
#include <vector>

#include "orbitgf/matrix.hpp"
#include "orbitgf/poly.hpp"
#include "orbitgf/series.hpp"
#include "orbitgf/vectorfield.hpp"

namespace orbitgf {

/// Finite linear combination of partial derivatives of the delta
/// distribution at the origin of a k-dimensional slice: a sparse map from
/// derivative multi-indices to rational coefficients.
class DeltaDistribution {
public:
  using CoeffMap = std::map<Exponents, Rational, GrlexLess>;

  explicit DeltaDistribution(int num_vars);
  /// The plain delta (coefficient 1 at multi-index 0).
  static DeltaDistribution delta(int num_vars);
  /// A single basis element: the beta-th partial of delta.
  static DeltaDistribution basis(int num_vars, const Exponents& beta);

  int num_vars() const { return num_vars_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Max |beta| over stored terms; -1 for the zero element.
  int order() const;
  Rational coeff(const Exponents& beta) const;

  void add_term(const Exponents& beta, const Rational& c);
  DeltaDistribution& operator+=(const DeltaDistribution& o);
  friend DeltaDistribution operator+(DeltaDistribution a, const DeltaDistribution& b) {
    return a += b;
  }
  DeltaDistribution scaled(const Rational& c) const;

  bool operator==(const DeltaDistribution& o) const {
    return num_vars_ == o.num_vars_ && coeffs_ == o.coeffs_;
  }

  std::string str() const;

private:
  int num_vars_;
  CoeffMap coeffs_;
};

/// Partial derivative along variable j: shifts every multi-index by e_j.
DeltaDistribution apply_derivative(const DeltaDistribution& xi, int j);

/// Multiplication by the monomial x^a, iterating the one-variable rule
/// x_m * d^beta(delta) = -beta_m * d^(beta - e_m)(delta); terms whose index
/// would go negative vanish.
DeltaDistribution apply_monomial(const DeltaDistribution& xi, const Exponents& a);

/// Action of a polynomial vector field: v.xi = sum_j p_j * (d_j xi),
/// multiplication applied after differentiation.
DeltaDistribution apply_field(const PolyVectorField& v, const DeltaDistribution& xi);

/// K(0..max_order) where K(n) is the dimension of the space of
/// distributions of order <= n annihilated exactly by every field.
DimSeries kernel_dimensions(const std::vector<PolyVectorField>& fields, int num_vars,
                            int max_order);

/// The constraint system for one order: rows are (field, target multi-index)
/// pairs, columns the basis multi-indices of order <= n. Exposed so tests
/// and the benchmark can reuse the exact assembly.
QMatrix kernel_constraint_matrix(const std::vector<PolyVectorField>& fields, int num_vars,
                                 int order);

}  // namespace orbitgf
