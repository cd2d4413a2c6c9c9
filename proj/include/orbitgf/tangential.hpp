#pragma once

#include <vector>

#include "orbitgf/action.hpp"
#include "orbitgf/vectorfield.hpp"

namespace orbitgf {

/// One raw tangency solution: the coefficient vector of the algebra-valued
/// polynomial map phi (indexed by generator, then monomial of degree <=
/// degree_bound in graded-lex order) together with the induced field in
/// slice coordinates.
struct TangentialSolution {
  std::vector<Rational> phi_coeffs;
  PolyVectorField slice_field;
};

/// Nullspace of the tangency system: phi(u) = sum c_{a,beta} u^beta X_a with
/// Q * (field of phi along the slice) == 0 as a polynomial identity.
std::vector<TangentialSolution> tangential_solutions(const LieAction& action,
                                                     const AffineSlice& slice, int degree_bound);

/// Degree-truncated generators of the strongly tangential fields on the
/// slice, in slice coordinates via the slice's left inverse. The returned
/// basis is canonicalized (reduced echelon over the coefficient space,
/// integer primitive rows) and linearly independent; zero fields are
/// dropped. Empty when no nonzero solutions exist.
std::vector<PolyVectorField> tangential_generators(const LieAction& action,
                                                   const AffineSlice& slice, int degree_bound);

/// Rebuilds the ambient field of phi along the slice directly by polynomial
/// arithmetic (independent of the linear-system assembly); used to re-check
/// the tangency identity and the slice projection. One ambient component per
/// ambient coordinate, each a polynomial in the slice variables.
std::vector<MultiPoly> ambient_field_along_slice(const LieAction& action,
                                                 const AffineSlice& slice,
                                                 const std::vector<Rational>& phi_coeffs,
                                                 int degree_bound);

/// True iff candidate = sum q_i * generators[i] for polynomials q_i of
/// degree <= degree_bound (an exact linear solve in the q coefficients).
bool module_contains(const std::vector<PolyVectorField>& generators,
                     const PolyVectorField& candidate, int degree_bound);

}  // namespace orbitgf
