#include "orbitgf/molien.hpp"

#include <algorithm>
#include <string>

namespace orbitgf {

namespace {

std::vector<std::string> torus_variables(int rank) {
  std::vector<std::string> vars;
  vars.reserve(rank);
  for (int i = 0; i < rank; ++i) vars.push_back("x" + std::to_string(i + 1));
  return vars;
}

}  // namespace

void ReductiveSpec::validate() const {
  if (torus_rank < 0) throw std::invalid_argument("ReductiveSpec: negative rank");
  if (weyl_group_order < 1) throw std::invalid_argument("ReductiveSpec: Weyl order must be >= 1");
  for (const auto& r : roots) {
    if (static_cast<int>(r.size()) != torus_rank)
      throw std::invalid_argument("ReductiveSpec: root length does not match rank");
    Exponents neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    if (std::find(roots.begin(), roots.end(), neg) == roots.end())
      throw std::invalid_argument("ReductiveSpec: root list not closed under negation");
  }
}

std::vector<LaurentPoly> sym_character_series(const WeightCharacter& w, int N) {
  if (N < 0) throw std::invalid_argument("sym_character_series: negative order");
  const auto vars = torus_variables(w.torus_rank);
  for (const auto& mu : w.weights)
    if (static_cast<int>(mu.size()) != w.torus_rank)
      throw std::invalid_argument("WeightCharacter: weight length does not match rank");

  std::vector<LaurentPoly> h(N + 1, LaurentPoly(vars));
  h[0] = LaurentPoly::constant(vars, Rational(1));
  // multiply by (1 - t x^mu)^{-1} one weight at a time:
  // h'[i] = h[i] + x^mu * h'[i-1]
  for (const auto& mu : w.weights)
    for (int i = 1; i <= N; ++i) h[i] += h[i - 1].shifted(mu, Rational(1));
  return h;
}

DimSeries invariant_dims(const ReductiveSpec& g, const WeightCharacter& w, int N) {
  g.validate();
  if (g.torus_rank != w.torus_rank)
    throw std::invalid_argument("invariant_dims: group and module rank differ");
  const auto vars = torus_variables(g.torus_rank);

  LaurentPoly weyl = LaurentPoly::constant(vars, Rational(1));
  for (const auto& alpha : g.roots) {
    LaurentPoly factor = LaurentPoly::constant(vars, Rational(1));
    factor.add_term(alpha, Rational(-1));
    weyl = weyl * factor;
  }

  const std::vector<LaurentPoly> chars = sym_character_series(w, N);
  const ExpBox origin = ExpBox::zero(g.torus_rank);
  std::vector<Rational> raw(N + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i <= N; ++i)
    raw[i] = laurent_mul_truncated(chars[i], weyl, origin).constant_term() /
             Rational(g.weyl_group_order);

  DimSeries out;
  out.values.reserve(N + 1);
  for (int i = 0; i <= N; ++i) {
    if (!raw[i].is_integer() || raw[i].sign() < 0)
      throw NonIntegerResult("invariant_dims: degree " + std::to_string(i) +
                             " yields " + raw[i].str() +
                             "; Weyl order or root list is inconsistent");
    out.values.push_back(raw[i].num().get_si());
  }
  return out;
}

ReductiveSpec gl_product_group(const std::vector<int>& blocks) {
  ReductiveSpec g;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("gl_product_group: block sizes must be >= 1");
    g.torus_rank += b;
    for (int i = 2; i <= b; ++i) g.weyl_group_order *= i;
  }
  int offset = 0;
  for (int b : blocks) {
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        if (i == j) continue;
        Exponents root(g.torus_rank, 0);
        root[offset + i] = 1;
        root[offset + j] = -1;
        g.roots.push_back(std::move(root));
      }
    offset += b;
  }
  return g;
}

WeightCharacter gl_product_adjoint_weights(const std::vector<int>& blocks) {
  WeightCharacter w;
  for (int b : blocks) w.torus_rank += b;
  int offset = 0;
  for (int b : blocks) {
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        Exponents wgt(w.torus_rank, 0);
        wgt[offset + i] += 1;
        wgt[offset + j] -= 1;
        w.weights.push_back(std::move(wgt));
      }
    offset += b;
  }
  return w;
}

DimSeries realified_invariant_dims(const ReductiveSpec& g, const WeightCharacter& w, int N) {
  DimSeries holo = invariant_dims(g, w, N);
  WeightCharacter conj{w.torus_rank, {}};
  conj.weights.reserve(w.weights.size());
  for (const auto& mu : w.weights) {
    Exponents neg(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
    conj.weights.push_back(std::move(neg));
  }
  DimSeries anti = invariant_dims(g, conj, N);
  return DimSeries(product_gf(holo.values, anti.values));
}

}  // namespace orbitgf
