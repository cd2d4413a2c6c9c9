#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitgf/matrix.hpp"
#include "orbitgf/poly.hpp"
#include "orbitgf/vectorfield.hpp"

namespace orbitgf {

/// A Lie-algebra action on an affine ambient space, presented by the
/// fundamental vector fields of a basis of the algebra.
struct LieAction {
  std::vector<std::string> variables;
  std::vector<PolyVectorField> generators;

  int ambient_dim() const { return static_cast<int>(variables.size()); }
  void validate() const;
};

/// Affine slice: base point plus the column span of `basis` (n x k, full
/// column rank), with a fixed left inverse L (k x n, L basis = I) and a
/// complement Q ((n-k) x n, Q basis = 0, full row rank).
struct AffineSlice {
  std::vector<Rational> base;
  QMatrix basis;
  QMatrix left_inverse;
  QMatrix complement;
  std::vector<std::string> slice_variables;

  int ambient_dim() const { return static_cast<int>(base.size()); }
  int dim() const { return basis.cols(); }
  /// Ambient point of the slice coordinates u: base + basis*u.
  std::vector<Rational> point(const std::vector<Rational>& u) const;
};

/// Computes the canonical left inverse and complement for a full-column-rank
/// basis: L solves on the pivot rows of the basis, Q spans the left
/// annihilator of its column space.
AffineSlice make_slice(std::vector<Rational> base, const QMatrix& basis,
                       std::vector<std::string> slice_variables);

/// Linear combination of generator fields: sum coeffs[a] * generators[a].
PolyVectorField fundamental_field(const LieAction& action, const std::vector<Rational>& coeffs);

/// Slice through x0 spanned by the lexicographically-first standard basis
/// vectors that complete the infinitesimal orbit tangent space. Slice
/// variables inherit the chosen ambient coordinate names.
AffineSlice slice_construct(const LieAction& action, const std::vector<Rational>& x0);

struct SliceCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<SliceCheck> checks;
  bool all_pass() const;
};

/// Checks at the base point that (a) orbit directions plus slice directions
/// span the ambient space and (b) their dimensions add up to it, repeating
/// (a) at each extra sample point (given in slice coordinates).
ValidationReport slice_validate(const LieAction& action, const AffineSlice& slice,
                                const std::vector<std::vector<Rational>>& sample_points = {});

// ---- complex scenarios (Gaussian-rational scalars) ----

struct GaussianRational {
  Rational re, im;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

/// Polynomial with Gaussian-rational coefficients, stored as a real/imaginary
/// pair over a shared variable list.
struct ComplexPoly {
  MultiPoly re, im;

  static ComplexPoly zero(const std::vector<std::string>& vars);
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexPoly operator+(const ComplexPoly& o) const;
  ComplexPoly operator*(const ComplexPoly& o) const;
  ComplexPoly scaled(const GaussianRational& c) const;
};

struct ComplexVectorField {
  std::vector<std::string> variables;
  std::vector<ComplexPoly> components;
};

struct ComplexMatrix {
  QMatrix re, im;
};

/// A LieAction and AffineSlice with Gaussian-rational scalars.
struct ComplexScenario {
  std::vector<std::string> variables;
  std::vector<ComplexVectorField> generators;
  std::vector<GaussianRational> base;
  ComplexMatrix basis;         // n x k
  ComplexMatrix left_inverse;  // k x n
  ComplexMatrix complement;    // (n-k) x n
  std::vector<std::string> slice_variables;

  int ambient_dim() const { return static_cast<int>(variables.size()); }
};

/// Fills in the complex left inverse and complement from the basis by
/// Gaussian elimination over the Gaussian rationals.
void complete_complex_slice(ComplexScenario& scenario);

/// Real coordinates are ordered all real parts first, then all imaginary
/// parts, named <z>_re / <z>_im.
std::vector<std::string> realified_variables(const std::vector<std::string>& complex_vars);

/// The two real fields of a holomorphic field v: the realification of v
/// (Re p_j on d/dx_j, Im p_j on d/dy_j) and of i*v.
std::pair<PolyVectorField, PolyVectorField> realify_field(const ComplexVectorField& field);

/// Doubles coordinates z_j = x_j + i y_j: every generator contributes two
/// real generators, the complex slice of dimension k becomes a real slice of
/// dimension 2k, and complex matrices map to [[Re,-Im],[Im,Re]].
std::pair<LieAction, AffineSlice> realify(const ComplexScenario& scenario);

/// Complex-linear analogue of slice_validate at the base point, computed
/// with exact Gaussian-rational ranks.
ValidationReport complex_slice_validate(const ComplexScenario& scenario);

// ---- builders for the bundled scenarios ----

/// Adjoint action of gl_n on itself; coordinates are the matrix entries in
/// row-major order (A11, A12, ...), one generator per basis element E_ij.
LieAction make_adjoint_gl(int n);

/// Adjoint action on traceless n x n matrices; coordinates are all entries
/// except the last diagonal one, generators are the E_ij (i != j) followed by
/// H_i = E_ii - E_{i+1,i+1}.
LieAction make_adjoint_sl(int n);

}  // namespace orbitgf
