#pragma once

#include <stdexcept>
#include <vector>

#include "orbitgf/poly.hpp"
#include "orbitgf/series.hpp"

namespace orbitgf {

/// Reductive group presented by its maximal-torus data: rank, Weyl group
/// order, and the full root list (positive and negative roots together).
struct ReductiveSpec {
  int torus_rank = 0;
  long long weyl_group_order = 1;
  std::vector<Exponents> roots;

  void validate() const;  // roots closed under negation, |W| >= 1
};

/// Weights of a torus module, with multiplicity.
struct WeightCharacter {
  int torus_rank = 0;
  std::vector<Exponents> weights;
};

class NonIntegerResult : public std::runtime_error {
public:
  explicit NonIntegerResult(const std::string& what) : std::runtime_error(what) {}
};

/// Characters of Sym^0..Sym^N of the module as Laurent polynomials in the
/// torus variables: the t-coefficients of prod_mu (1 - t x^mu)^{-1}.
std::vector<LaurentPoly> sym_character_series(const WeightCharacter& w, int N);

/// dim (Sym^i of the module)^G for i = 0..N by exact Weyl-integration
/// constant-term extraction: (1/|W|) CT[ char_{Sym^i} * prod_roots (1-x^a) ].
/// Throws NonIntegerResult when the group data is inconsistent.
DimSeries invariant_dims(const ReductiveSpec& g, const WeightCharacter& w, int N);

/// Series for Sym of (module + conjugate module): the Cauchy product of the
/// invariant dimensions of w and of the negated weight set. This is the
/// complex-module-as-real convention used throughout.
DimSeries realified_invariant_dims(const ReductiveSpec& g, const WeightCharacter& w, int N);

/// Torus data of a product of general linear groups; blocks {2, 1} means
/// GL2 x GL1. Rank is the total size, the Weyl order is the product of the
/// block factorials, roots live inside each block.
ReductiveSpec gl_product_group(const std::vector<int>& blocks);

/// Weights of the product group acting on its own Lie algebra (the direct
/// sum of the blockwise adjoint modules).
WeightCharacter gl_product_adjoint_weights(const std::vector<int>& blocks);

}  // namespace orbitgf
