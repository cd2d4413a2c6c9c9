#include "orbitgf/action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbitgf {

void LieAction::validate() const {
  for (const auto& g : generators) {
    if (g.variables != variables)
      throw std::invalid_argument("LieAction: generator variable list differs from ambient");
    if (static_cast<int>(g.components.size()) != ambient_dim())
      throw std::invalid_argument("LieAction: generator component count differs from ambient");
  }
}

std::vector<Rational> AffineSlice::point(const std::vector<Rational>& u) const {
  if (static_cast<int>(u.size()) != dim())
    throw std::invalid_argument("AffineSlice::point: coordinate length mismatch");
  std::vector<Rational> p = base;
  std::vector<Rational> shift = basis.mul_vec(u);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += shift[i];
  return p;
}

namespace {

// Incremental exact row reduction used for rank and greedy completion.
class SpanTracker {
public:
  explicit SpanTracker(int dim) : dim_(dim) {}

  // Returns true (and absorbs the vector) when v is independent of the span.
  bool absorb(std::vector<Rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      Rational f = v[pivot];
      for (int i = 0; i < dim_; ++i) v[i] -= f * row[i];
    }
    int pivot = -1;
    for (int i = 0; i < dim_; ++i)
      if (!v[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    Rational inv = v[pivot].inverse();
    for (int i = 0; i < dim_; ++i) v[i] *= inv;
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  int dim_;
  std::vector<std::pair<int, std::vector<Rational>>> rows_;
};

std::vector<Rational> field_value(const PolyVectorField& f, const std::vector<Rational>& point) {
  std::vector<Rational> v(f.components.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.components[i].eval(point);
  return v;
}

}  // namespace

AffineSlice make_slice(std::vector<Rational> base, const QMatrix& basis,
                       std::vector<std::string> slice_variables) {
  const int n = basis.rows();
  const int k = basis.cols();
  if (static_cast<int>(base.size()) != n)
    throw std::invalid_argument("make_slice: base length does not match basis rows");
  if (static_cast<int>(slice_variables.size()) != k)
    throw std::invalid_argument("make_slice: one slice variable per basis column required");

  // pivot rows: first k linearly independent rows of the basis
  SpanTracker span(k);
  std::vector<int> pivot_rows;
  for (int r = 0; r < n && static_cast<int>(pivot_rows.size()) < k; ++r) {
    std::vector<Rational> row(k);
    for (int c = 0; c < k; ++c) row[c] = basis.get(r, c);
    if (span.absorb(std::move(row))) pivot_rows.push_back(r);
  }
  if (static_cast<int>(pivot_rows.size()) != k)
    throw std::invalid_argument("make_slice: basis does not have full column rank");

  // invert the pivot-row submatrix column by column
  QMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.set(i, j, basis.get(pivot_rows[i], j));
  QMatrix sub_inv(k, k);
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> e(k, Rational(0));
    e[j] = Rational(1);
    auto col = linear_solve(sub, e);
    for (int i = 0; i < k; ++i) sub_inv.set(i, j, (*col)[i]);
  }
  QMatrix left(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) left.add(i, pivot_rows[j], sub_inv.get(i, j));

  // complement: left annihilator of the column space
  std::vector<std::vector<Rational>> ann = nullspace(basis.transpose());
  QMatrix comp(n - k, n);
  for (std::size_t r = 0; r < ann.size(); ++r)
    for (int c = 0; c < n; ++c) comp.set(static_cast<int>(r), c, ann[r][c]);

  AffineSlice s;
  s.base = std::move(base);
  s.basis = basis;
  s.left_inverse = std::move(left);
  s.complement = std::move(comp);
  s.slice_variables = std::move(slice_variables);
  return s;
}

PolyVectorField fundamental_field(const LieAction& action, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != action.generators.size())
    throw std::invalid_argument("fundamental_field: coefficient count differs from generators");
  PolyVectorField out = PolyVectorField::zero(action.variables);
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    if (coeffs[a].is_zero()) continue;
    out += action.generators[a].scaled(coeffs[a]);
  }
  return out;
}

AffineSlice slice_construct(const LieAction& action, const std::vector<Rational>& x0) {
  action.validate();
  const int n = action.ambient_dim();
  if (static_cast<int>(x0.size()) != n)
    throw std::invalid_argument("slice_construct: point length does not match ambient");

  SpanTracker span(n);
  for (const auto& g : action.generators) span.absorb(field_value(g, x0));

  std::vector<int> chosen;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = Rational(1);
    if (span.absorb(std::move(e))) chosen.push_back(i);
  }

  QMatrix basis(n, static_cast<int>(chosen.size()));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    basis.set(chosen[j], static_cast<int>(j), Rational(1));
    names.push_back(action.variables[chosen[j]]);
  }
  return make_slice(x0, basis, std::move(names));
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

SliceCheck submersion_check(const LieAction& action, const AffineSlice& slice,
                            const std::vector<Rational>& point, const std::string& label) {
  const int n = action.ambient_dim();
  SpanTracker span(n);
  for (const auto& g : action.generators) span.absorb(field_value(g, point));
  for (int c = 0; c < slice.dim(); ++c) {
    std::vector<Rational> col(n);
    for (int r = 0; r < n; ++r) col[r] = slice.basis.get(r, c);
    span.absorb(std::move(col));
  }
  std::ostringstream detail;
  detail << "orbit directions + slice directions span " << span.rank() << " of " << n << " at "
         << label;
  return SliceCheck{"submersion at " + label, span.rank() == n, detail.str()};
}

}  // namespace

ValidationReport slice_validate(const LieAction& action, const AffineSlice& slice,
                                const std::vector<std::vector<Rational>>& sample_points) {
  action.validate();
  const int n = action.ambient_dim();
  if (slice.ambient_dim() != n)
    throw std::invalid_argument("slice_validate: slice ambient dimension mismatch");

  ValidationReport report;
  report.checks.push_back(submersion_check(action, slice, slice.base, "base"));

  SpanTracker orbit(n);
  for (const auto& g : action.generators) orbit.absorb(field_value(g, slice.base));
  std::ostringstream detail;
  detail << "dim orbit " << orbit.rank() << " + dim slice " << slice.dim() << " vs ambient " << n;
  report.checks.push_back(
      SliceCheck{"dimension count", orbit.rank() + slice.dim() == n, detail.str()});

  for (std::size_t s = 0; s < sample_points.size(); ++s)
    report.checks.push_back(submersion_check(action, slice, slice.point(sample_points[s]),
                                             "sample point " + std::to_string(s)));
  return report;
}

// ---- complex scenarios ----

namespace {

GaussianRational c_mul(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational c_sub(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational{a.re - b.re, a.im - b.im};
}

GaussianRational c_inv(const GaussianRational& a) {
  Rational n = a.re * a.re + a.im * a.im;
  if (n.is_zero()) throw std::domain_error("Gaussian rational: inverse of zero");
  return GaussianRational{a.re / n, -a.im / n};
}

using CVec = std::vector<GaussianRational>;
using CMat = std::vector<CVec>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> c_rref(CMat& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.front().size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    GaussianRational inv = c_inv(m[r][c]);
    for (int j = 0; j < cols; ++j) m[r][j] = c_mul(m[r][j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussianRational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = c_sub(m[i][j], c_mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int c_rank(CMat m) { return static_cast<int>(c_rref(m).size()); }

GaussianRational complex_eval(const ComplexPoly& p, const CVec& point) {
  GaussianRational acc{Rational(0), Rational(0)};
  auto add_terms = [&](const MultiPoly& part, bool imaginary) {
    for (const auto& [e, c] : part.terms()) {
      GaussianRational term = imaginary ? GaussianRational{Rational(0), c}
                                        : GaussianRational{c, Rational(0)};
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term = c_mul(term, point[i]);
      acc.re += term.re;
      acc.im += term.im;
    }
  };
  add_terms(p.re, false);
  add_terms(p.im, true);
  return acc;
}

}  // namespace

ComplexPoly ComplexPoly::zero(const std::vector<std::string>& vars) {
  return ComplexPoly{MultiPoly(vars), MultiPoly(vars)};
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& o) const {
  return ComplexPoly{re + o.re, im + o.im};
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& o) const {
  return ComplexPoly{re * o.re - im * o.im, re * o.im + im * o.re};
}

ComplexPoly ComplexPoly::scaled(const GaussianRational& c) const {
  return ComplexPoly{re.scaled(c.re) - im.scaled(c.im), re.scaled(c.im) + im.scaled(c.re)};
}

void complete_complex_slice(ComplexScenario& scenario) {
  const int n = scenario.ambient_dim();
  const int k = scenario.basis.re.cols();

  // left inverse from the first k independent rows of the basis
  CMat rows(n, CVec(k));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c)
      rows[r][c] = GaussianRational{scenario.basis.re.get(r, c), scenario.basis.im.get(r, c)};

  std::vector<int> pivot_rows;
  {
    CMat probe;
    for (int r = 0; r < n && static_cast<int>(pivot_rows.size()) < k; ++r) {
      CMat trial = probe;
      trial.push_back(rows[r]);
      if (c_rank(trial) > static_cast<int>(probe.size())) {
        probe = std::move(trial);
        pivot_rows.push_back(r);
      }
    }
  }
  if (static_cast<int>(pivot_rows.size()) != k)
    throw std::invalid_argument("complex slice basis does not have full column rank");

  // invert the pivot submatrix: rref of [S | I]
  CMat aug(k, CVec(2 * k, GaussianRational{Rational(0), Rational(0)}));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = rows[pivot_rows[i]][j];
    aug[i][k + i] = GaussianRational{Rational(1), Rational(0)};
  }
  c_rref(aug);
  scenario.left_inverse.re = QMatrix(k, n);
  scenario.left_inverse.im = QMatrix(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      scenario.left_inverse.re.set(i, pivot_rows[j], aug[i][k + j].re);
      scenario.left_inverse.im.set(i, pivot_rows[j], aug[i][k + j].im);
    }

  // complement: kernel basis of basis^T
  CMat bt(k, CVec(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) bt[c][r] = rows[r][c];
  CMat red = bt;
  std::vector<int> pivots = c_rref(red);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  scenario.complement.re = QMatrix(n - k, n);
  scenario.complement.im = QMatrix(n - k, n);
  int out_row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    scenario.complement.re.set(out_row, f, Rational(1));
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      GaussianRational v = red[pi][f];
      scenario.complement.re.set(out_row, pivots[pi], -v.re);
      scenario.complement.im.set(out_row, pivots[pi], -v.im);
    }
    ++out_row;
  }
}

std::vector<std::string> realified_variables(const std::vector<std::string>& complex_vars) {
  std::vector<std::string> out;
  out.reserve(2 * complex_vars.size());
  for (const auto& v : complex_vars) out.push_back(v + "_re");
  for (const auto& v : complex_vars) out.push_back(v + "_im");
  return out;
}

std::pair<PolyVectorField, PolyVectorField> realify_field(const ComplexVectorField& field) {
  const int n = static_cast<int>(field.variables.size());
  const std::vector<std::string> rvars = realified_variables(field.variables);

  // z_j = x_j + i y_j as a complex polynomial in the doubled variables
  std::vector<ComplexPoly> embed(n);
  for (int j = 0; j < n; ++j)
    embed[j] = ComplexPoly{MultiPoly::variable(rvars, j), MultiPoly::variable(rvars, n + j)};

  auto substitute = [&](const ComplexPoly& p) {
    ComplexPoly out = ComplexPoly::zero(rvars);
    auto expand = [&](const MultiPoly& part, bool imaginary) {
      for (const auto& [e, c] : part.terms()) {
        ComplexPoly term{MultiPoly::constant(rvars, imaginary ? Rational(0) : c),
                         MultiPoly::constant(rvars, imaginary ? c : Rational(0))};
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < e[j]; ++k) term = term * embed[j];
        out = out + term;
      }
    };
    expand(p.re, false);
    expand(p.im, true);
    return out;
  };

  std::vector<MultiPoly> v_comps(2 * n, MultiPoly(rvars));
  std::vector<MultiPoly> iv_comps(2 * n, MultiPoly(rvars));
  for (int j = 0; j < n; ++j) {
    ComplexPoly pj = substitute(field.components[j]);
    v_comps[j] = pj.re;
    v_comps[n + j] = pj.im;
    iv_comps[j] = -pj.im;
    iv_comps[n + j] = pj.re;
  }
  return {PolyVectorField(rvars, std::move(v_comps)), PolyVectorField(rvars, std::move(iv_comps))};
}

namespace {

QMatrix realify_matrix(const ComplexMatrix& m) {
  const int r = m.re.rows(), c = m.re.cols();
  QMatrix out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      Rational re = m.re.get(i, j), im = m.im.get(i, j);
      out.set(i, j, re);
      out.set(i, c + j, -im);
      out.set(r + i, j, im);
      out.set(r + i, c + j, re);
    }
  return out;
}

}  // namespace

std::pair<LieAction, AffineSlice> realify(const ComplexScenario& scenario) {
  const int n = scenario.ambient_dim();
  LieAction action;
  action.variables = realified_variables(scenario.variables);
  for (const auto& g : scenario.generators) {
    auto [v, iv] = realify_field(g);
    action.generators.push_back(std::move(v));
    action.generators.push_back(std::move(iv));
  }

  AffineSlice slice;
  slice.base.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    slice.base[i] = scenario.base[i].re;
    slice.base[n + i] = scenario.base[i].im;
  }
  slice.basis = realify_matrix(scenario.basis);
  slice.left_inverse = realify_matrix(scenario.left_inverse);
  slice.complement = realify_matrix(scenario.complement);
  slice.slice_variables = realified_variables(scenario.slice_variables);
  return {std::move(action), std::move(slice)};
}

ValidationReport complex_slice_validate(const ComplexScenario& scenario) {
  const int n = scenario.ambient_dim();
  const int k = scenario.basis.re.cols();

  CVec base(n);
  for (int i = 0; i < n; ++i) base[i] = scenario.base[i];

  // columns: generator values at the base point, then slice directions
  CMat cols;
  for (const auto& g : scenario.generators) {
    CVec col(n);
    for (int i = 0; i < n; ++i) col[i] = complex_eval(g.components[i], base);
    cols.push_back(std::move(col));
  }
  const int orbit_rank = c_rank(cols);
  for (int j = 0; j < k; ++j) {
    CVec col(n);
    for (int i = 0; i < n; ++i)
      col[i] = GaussianRational{scenario.basis.re.get(i, j), scenario.basis.im.get(i, j)};
    cols.push_back(std::move(col));
  }
  const int full_rank = c_rank(cols);

  ValidationReport report;
  std::ostringstream d1;
  d1 << "orbit directions + slice directions span " << full_rank << " of " << n << " at base";
  report.checks.push_back(SliceCheck{"submersion at base", full_rank == n, d1.str()});
  std::ostringstream d2;
  d2 << "dim orbit " << orbit_rank << " + dim slice " << k << " vs ambient " << n;
  report.checks.push_back(SliceCheck{"dimension count", orbit_rank + k == n, d2.str()});
  return report;
}

// ---- adjoint builders ----

namespace {

// [X, A] for a constant matrix X and symbolic matrix A.
std::vector<std::vector<MultiPoly>> bracket(const std::vector<std::vector<Rational>>& x,
                                            const std::vector<std::vector<MultiPoly>>& a,
                                            const std::vector<std::string>& vars) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<MultiPoly>> out(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly s(vars);
      for (int k = 0; k < n; ++k) {
        if (!x[i][k].is_zero()) s += a[k][j].scaled(x[i][k]);
        if (!x[k][j].is_zero()) s -= a[i][k].scaled(x[k][j]);
      }
      out[i][j] = std::move(s);
    }
  return out;
}

std::vector<std::vector<Rational>> basis_matrix(int n, int r, int c, const Rational& v) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  m[r][c] = v;
  return m;
}

}  // namespace

LieAction make_adjoint_gl(int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back("A" + std::to_string(i) + std::to_string(j));

  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = MultiPoly::variable(vars, i * n + j);

  LieAction action;
  action.variables = vars;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      auto b = bracket(basis_matrix(n, r, c, Rational(1)), a, vars);
      std::vector<MultiPoly> comps;
      comps.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) comps.push_back(std::move(b[i][j]));
      action.generators.push_back(PolyVectorField(vars, std::move(comps)));
    }
  return action;
}

LieAction make_adjoint_sl(int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(i == n && j == n)) vars.push_back("A" + std::to_string(i) + std::to_string(j));

  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n));
  int idx = 0;
  MultiPoly trace_rest(vars);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      a[i][j] = MultiPoly::variable(vars, idx++);
      if (i == j) trace_rest += a[i][j];
    }
  a[n - 1][n - 1] = -trace_rest;

  LieAction action;
  action.variables = vars;
  auto add_generator = [&](const std::vector<std::vector<Rational>>& x) {
    auto b = bracket(x, a, vars);
    std::vector<MultiPoly> comps;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(i == n - 1 && j == n - 1)) comps.push_back(std::move(b[i][j]));
    action.generators.push_back(PolyVectorField(vars, std::move(comps)));
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) add_generator(basis_matrix(n, r, c, Rational(1)));
  for (int i = 0; i + 1 < n; ++i) {
    auto h = basis_matrix(n, i, i, Rational(1));
    h[i + 1][i + 1] = Rational(-1);
    add_generator(h);
  }
  return action;
}

}  // namespace orbitgf
