#include "orbitgf/tangential.hpp"

#include <map>
#include <stdexcept>

namespace orbitgf {

namespace {

// ambient coordinate polynomials of the slice point s(u) = base + basis*u
std::vector<MultiPoly> slice_images(const AffineSlice& slice) {
  const auto& uvars = slice.slice_variables;
  std::vector<MultiPoly> images;
  images.reserve(slice.ambient_dim());
  for (int i = 0; i < slice.ambient_dim(); ++i) {
    MultiPoly s = MultiPoly::constant(uvars, slice.base[i]);
    for (const auto& [j, v] : slice.basis.row(i))
      s += MultiPoly::variable(uvars, j).scaled(v);
    images.push_back(std::move(s));
  }
  return images;
}

// generator fields restricted to the slice, as polynomials in u
std::vector<std::vector<MultiPoly>> fields_along_slice(const LieAction& action,
                                                       const AffineSlice& slice) {
  const auto images = slice_images(slice);
  std::vector<std::vector<MultiPoly>> w;
  w.reserve(action.generators.size());
  for (const auto& g : action.generators) {
    std::vector<MultiPoly> comps;
    comps.reserve(g.components.size());
    for (const auto& p : g.components) comps.push_back(p.substitute(images));
    w.push_back(std::move(comps));
  }
  return w;
}

std::vector<MultiPoly> matrix_times_components(const QMatrix& m,
                                               const std::vector<MultiPoly>& comps,
                                               const std::vector<std::string>& uvars) {
  std::vector<MultiPoly> out(m.rows(), MultiPoly(uvars));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out[r] += comps[c].scaled(v);
  return out;
}

int max_degree(const std::vector<std::vector<MultiPoly>>& polys) {
  int d = 0;
  for (const auto& row : polys)
    for (const auto& p : row)
      if (!p.is_zero()) d = std::max(d, p.degree());
  return d;
}

PolyVectorField field_from_solution(const std::vector<std::vector<MultiPoly>>& per_generator,
                                    const std::vector<Rational>& coeffs,
                                    const std::vector<Exponents>& phi_monomials,
                                    const std::vector<std::string>& uvars) {
  const int k = per_generator.empty() ? 0 : static_cast<int>(per_generator.front().size());
  std::vector<MultiPoly> comps(k, MultiPoly(uvars));
  const std::size_t nb = phi_monomials.size();
  for (std::size_t a = 0; a < per_generator.size(); ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const Rational& c = coeffs[a * nb + b];
      if (c.is_zero()) continue;
      MultiPoly shift = MultiPoly::monomial(uvars, phi_monomials[b], c);
      for (int j = 0; j < k; ++j)
        if (!per_generator[a][j].is_zero()) comps[j] += per_generator[a][j] * shift;
    }
  return PolyVectorField(uvars, std::move(comps));
}

}  // namespace

std::vector<TangentialSolution> tangential_solutions(const LieAction& action,
                                                     const AffineSlice& slice, int degree_bound) {
  action.validate();
  if (slice.ambient_dim() != action.ambient_dim())
    throw std::invalid_argument("tangential_solutions: ambient dimension mismatch");
  if (degree_bound < 0) throw std::invalid_argument("tangential_solutions: negative degree bound");

  const auto& uvars = slice.slice_variables;
  const int k = slice.dim();
  const auto w = fields_along_slice(action, slice);

  // residual and projected fields per generator
  std::vector<std::vector<MultiPoly>> qw, lw;
  qw.reserve(w.size());
  lw.reserve(w.size());
  for (const auto& wa : w) {
    qw.push_back(matrix_times_components(slice.complement, wa, uvars));
    lw.push_back(matrix_times_components(slice.left_inverse, wa, uvars));
  }

  const std::vector<Exponents> phi_monomials = monomials_up_to(k, degree_bound);
  const int eq_degree = degree_bound + max_degree(qw);
  const std::vector<Exponents> eq_monomials = monomials_up_to(k, eq_degree);
  std::map<Exponents, int, GrlexLess> eq_index;
  for (std::size_t i = 0; i < eq_monomials.size(); ++i)
    eq_index.emplace(eq_monomials[i], static_cast<int>(i));

  const int ng = static_cast<int>(action.generators.size());
  const int nb = static_cast<int>(phi_monomials.size());
  const int nq = slice.complement.rows();
  QMatrix system(nq * static_cast<int>(eq_monomials.size()), ng * nb);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nb; ++b) {
      const int col = a * nb + b;
      for (int r = 0; r < nq; ++r)
        for (const auto& [e, c] : qw[a][r].terms()) {
          Exponents m(e.size());
          for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] + phi_monomials[b][i];
          system.add(r * static_cast<int>(eq_monomials.size()) + eq_index.at(m), col, c);
        }
    }

  std::vector<TangentialSolution> out;
  for (auto& sol : nullspace(system)) {
    PolyVectorField f = field_from_solution(lw, sol, phi_monomials, uvars);
    out.push_back(TangentialSolution{std::move(sol), std::move(f)});
  }
  return out;
}

std::vector<MultiPoly> ambient_field_along_slice(const LieAction& action,
                                                 const AffineSlice& slice,
                                                 const std::vector<Rational>& phi_coeffs,
                                                 int degree_bound) {
  const auto w = fields_along_slice(action, slice);
  const std::vector<Exponents> phi_monomials = monomials_up_to(slice.dim(), degree_bound);
  if (phi_coeffs.size() != w.size() * phi_monomials.size())
    throw std::invalid_argument("ambient_field_along_slice: coefficient length mismatch");
  std::vector<MultiPoly> comps(slice.ambient_dim(), MultiPoly(slice.slice_variables));
  const std::size_t nb = phi_monomials.size();
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const Rational& c = phi_coeffs[a * nb + b];
      if (c.is_zero()) continue;
      MultiPoly shift = MultiPoly::monomial(slice.slice_variables, phi_monomials[b], c);
      for (int i = 0; i < slice.ambient_dim(); ++i)
        if (!w[a][i].is_zero()) comps[i] += w[a][i] * shift;
    }
  return comps;
}

std::vector<PolyVectorField> tangential_generators(const LieAction& action,
                                                   const AffineSlice& slice, int degree_bound) {
  const auto solutions = tangential_solutions(action, slice, degree_bound);
  const auto& uvars = slice.slice_variables;
  const int k = slice.dim();
  if (solutions.empty()) return {};

  int field_degree = 0;
  for (const auto& s : solutions)
    if (!s.slice_field.is_zero()) field_degree = std::max(field_degree, s.slice_field.degree());
  const std::vector<Exponents> span_monomials = monomials_up_to(k, field_degree);
  std::map<Exponents, int, GrlexLess> span_index;
  for (std::size_t i = 0; i < span_monomials.size(); ++i)
    span_index.emplace(span_monomials[i], static_cast<int>(i));
  const int width = k * static_cast<int>(span_monomials.size());

  // reduced echelon form over the field-coefficient space
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : solutions) {
    if (s.slice_field.is_zero()) continue;
    std::vector<Rational> row(width, Rational(0));
    for (int j = 0; j < k; ++j)
      for (const auto& [e, c] : s.slice_field.components[j].terms())
        row[j * span_monomials.size() + span_index.at(e)] = c;
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<Rational>> reduced;
  std::vector<int> leads;
  for (auto& row : rows) {
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (!row[leads[i]].is_zero()) {
        Rational f = row[leads[i]];
        for (int c = 0; c < width; ++c) row[c] -= f * reduced[i][c];
      }
    int lead = -1;
    for (int c = 0; c < width; ++c)
      if (!row[c].is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    Rational inv = row[lead].inverse();
    for (int c = 0; c < width; ++c) row[c] *= inv;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (!reduced[i][lead].is_zero()) {
        Rational f = reduced[i][lead];
        for (int c = 0; c < width; ++c) reduced[i][c] -= f * row[c];
      }
    reduced.push_back(row);
    leads.push_back(lead);
  }
  // sort by leading position for a canonical listing
  std::vector<std::size_t> order(reduced.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return leads[a] < leads[b];
  });

  std::vector<PolyVectorField> out;
  for (std::size_t oi : order) {
    auto& row = reduced[oi];
    // integer primitive form
    Integer den_lcm = 1;
    for (const auto& v : row)
      if (!v.is_zero()) den_lcm = lcm(den_lcm, v.den());
    Integer content = 0;
    for (auto& v : row) {
      if (v.is_zero()) continue;
      v *= Rational(den_lcm);
      content = gcd(content, v.num());
    }
    std::vector<MultiPoly> comps(k, MultiPoly(uvars));
    for (int j = 0; j < k; ++j)
      for (std::size_t m = 0; m < span_monomials.size(); ++m) {
        Rational v = row[j * span_monomials.size() + m];
        if (!v.is_zero()) comps[j].add_term(span_monomials[m], v / Rational(content));
      }
    out.push_back(PolyVectorField(uvars, std::move(comps)));
  }
  return out;
}

bool module_contains(const std::vector<PolyVectorField>& generators,
                     const PolyVectorField& candidate, int degree_bound) {
  for (const auto& g : generators)
    if (g.variables != candidate.variables)
      throw std::invalid_argument("module_contains: variable lists differ");
  if (degree_bound < 0) throw std::invalid_argument("module_contains: negative degree bound");

  const int k = candidate.nvars();
  int gen_degree = 0;
  for (const auto& g : generators)
    if (!g.is_zero()) gen_degree = std::max(gen_degree, g.degree());
  const int eq_degree = std::max(candidate.degree(), degree_bound + gen_degree);

  const std::vector<Exponents> q_monomials = monomials_up_to(k, degree_bound);
  const std::vector<Exponents> eq_monomials = monomials_up_to(k, eq_degree);
  std::map<Exponents, int, GrlexLess> eq_index;
  for (std::size_t i = 0; i < eq_monomials.size(); ++i)
    eq_index.emplace(eq_monomials[i], static_cast<int>(i));

  const int ng = static_cast<int>(generators.size());
  const int nb = static_cast<int>(q_monomials.size());
  QMatrix a(k * static_cast<int>(eq_monomials.size()), ng * nb);
  std::vector<Rational> b(a.rows(), Rational(0));
  for (int gi = 0; gi < ng; ++gi)
    for (int qi = 0; qi < nb; ++qi) {
      const int col = gi * nb + qi;
      for (int j = 0; j < k; ++j)
        for (const auto& [e, c] : generators[gi].components[j].terms()) {
          Exponents m(e.size());
          for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] + q_monomials[qi][i];
          a.add(j * static_cast<int>(eq_monomials.size()) + eq_index.at(m), col, c);
        }
    }
  for (int j = 0; j < k; ++j)
    for (const auto& [e, c] : candidate.components[j].terms())
      b[j * static_cast<int>(eq_monomials.size()) + eq_index.at(e)] = c;

  return linear_solve(a, b).has_value();
}

}  // namespace orbitgf
