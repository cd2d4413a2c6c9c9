#include "orbitgf/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbitgf {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative dimension");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

QMatrix QMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("QMatrix::from_dense: ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void QMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("QMatrix index out of bounds");
}

long long QMatrix::nnz() const {
  long long n = 0;
  for (const auto& row : row_data_) n += static_cast<long long>(row.size());
  return n;
}

Rational QMatrix::get(int r, int c) const {
  check(r, c);
  auto it = row_data_[r].find(c);
  return it == row_data_[r].end() ? Rational(0) : it->second;
}

void QMatrix::set(int r, int c, const Rational& v) {
  check(r, c);
  if (v.is_zero())
    row_data_[r].erase(c);
  else
    row_data_[r][c] = v;
}

void QMatrix::add(int r, int c, const Rational& v) {
  check(r, c);
  if (v.is_zero()) return;
  auto [it, inserted] = row_data_[r].emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row_data_[r].erase(it);
  }
}

const std::map<int, Rational>& QMatrix::row(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("QMatrix row index out of bounds");
  return row_data_[r];
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_data_[r]) t.set(c, r, v);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix multiply: shape mismatch");
  QMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : row_data_[r])
      for (const auto& [c, w] : o.row_data_[k]) out.add(r, c, v * w);
  return out;
}

std::vector<Rational> QMatrix::mul_vec(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("QMatrix mul_vec: length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, w] : row_data_[r]) out[r] += w * v[c];
  return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && row_data_ == o.row_data_;
}

namespace {

// One integer row of the elimination workspace, sorted by column.
using IntRow = std::vector<std::pair<int, Integer>>;

const Integer* row_value(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& p, int c) { return p.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// Divides by the gcd of the entries and makes the leading entry positive.
void normalize(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

// Fraction-free combination: target <- pivot_val * target - target_val * pivot,
// which zeroes `col` in the target. Content-normalized afterwards.
IntRow eliminate_col(const IntRow& target, const IntRow& pivot, int col) {
  const Integer* pv = row_value(pivot, col);
  const Integer* tv = row_value(target, col);
  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto ti = target.begin(), pi = pivot.begin();
  while (ti != target.end() || pi != pivot.end()) {
    if (pi == pivot.end() || (ti != target.end() && ti->first < pi->first)) {
      out.emplace_back(ti->first, *pv * ti->second);
      ++ti;
    } else if (ti == target.end() || pi->first < ti->first) {
      out.emplace_back(pi->first, -*tv * pi->second);
      ++pi;
    } else {
      Integer v = *pv * ti->second - *tv * pi->second;
      if (v != 0) out.emplace_back(ti->first, std::move(v));
      ++ti;
      ++pi;
    }
  }
  normalize(out);
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::pair<int, int>> pivots;  // (row, col) in pivot order
};

// Row echelon form over the integers with a fixed, deterministic pivot rule:
// columns left to right; among candidate rows the one with fewest entries,
// then smallest |value|, then lowest index. Columns >= num_pivot_cols are
// never pivoted (used to carry right-hand sides).
Echelon echelon_form(const QMatrix& m, int num_pivot_cols, bool parallel) {
  Echelon ech;
  std::vector<IntRow>& rows = ech.rows;
  for (int r = 0; r < m.rows(); ++r) {
    const auto& src = m.row(r);
    if (src.empty()) continue;
    Integer den_lcm = 1;
    for (const auto& [c, v] : src) den_lcm = lcm(den_lcm, v.den());
    IntRow row;
    row.reserve(src.size());
    for (const auto& [c, v] : src) row.emplace_back(c, Integer(v.num() * (den_lcm / v.den())));
    normalize(row);
    rows.push_back(std::move(row));
  }

  const int n = static_cast<int>(rows.size());
  std::vector<char> active(n, 1);
  std::vector<std::vector<int>> col_rows(m.cols());
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);

  for (int col = 0; col < num_pivot_cols; ++col) {
    // compact the candidate list: drop stale and duplicate entries
    auto& cand = col_rows[col];
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    cand.erase(std::remove_if(cand.begin(), cand.end(),
                              [&](int r) { return !active[r] || !row_value(rows[r], col); }),
               cand.end());
    if (cand.empty()) continue;

    int best = cand.front();
    for (int r : cand) {
      if (r == best) continue;
      std::size_t nr = rows[r].size(), nb = rows[best].size();
      if (nr != nb) {
        if (nr < nb) best = r;
        continue;
      }
      int cmp = mpz_cmpabs(row_value(rows[r], col)->get_mpz_t(),
                           row_value(rows[best], col)->get_mpz_t());
      if (cmp < 0 || (cmp == 0 && r < best)) best = r;
    }

    active[best] = 0;
    ech.pivots.emplace_back(best, col);

    std::vector<int> affected;
    affected.reserve(cand.size());
    for (int r : cand)
      if (r != best) affected.push_back(r);
    if (affected.empty()) continue;

    const IntRow& pivot_row = rows[best];
    // below the threshold the parallel-region overhead outweighs the work
    constexpr std::size_t kParallelThreshold = 24;
#ifdef _OPENMP
    if (parallel && affected.size() >= kParallelThreshold) {
#pragma omp parallel for schedule(static)
      for (std::size_t i = 0; i < affected.size(); ++i)
        rows[affected[i]] = eliminate_col(rows[affected[i]], pivot_row, col);
    } else
#endif
    {
      (void)parallel;
      for (int r : affected) rows[r] = eliminate_col(rows[r], pivot_row, col);
    }

    // fill-in can only appear at the pivot row's columns
    for (const auto& [c, v] : pivot_row)
      if (c != col)
        for (int r : affected) col_rows[c].push_back(r);
  }
  return ech;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m, bool parallel) {
  Echelon ech = echelon_form(m, m.cols(), parallel);

  std::vector<char> is_pivot_col(m.cols(), 0);
  for (const auto& [r, c] : ech.pivots) is_pivot_col[c] = 1;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[f] = Rational(1);
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
      const auto& [pr, pc] = *it;
      Rational s(0);
      const Integer* diag = nullptr;
      for (const auto& [c, v] : ech.rows[pr]) {
        if (c == pc) {
          diag = &v;
          continue;
        }
        if (!x[c].is_zero()) s += Rational(v) * x[c];
      }
      x[pc] = -s / Rational(*diag);
    }
    // clear denominators, remove content, keep the free entry positive
    Integer den_lcm = 1;
    for (const auto& v : x)
      if (!v.is_zero()) den_lcm = lcm(den_lcm, v.den());
    Integer content = 0;
    std::vector<Integer> iv(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      iv[i] = x[i].num() * (den_lcm / x[i].den());
      content = gcd(content, iv[i]);
    }
    std::vector<Rational> out(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) out[i] = Rational(Integer(iv[i] / content));
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) { return kernel_basis(m, true); }

std::vector<std::vector<Rational>> nullspace_serial(const QMatrix& m) {
  return kernel_basis(m, false);
}

int rank(const QMatrix& m) {
  return static_cast<int>(echelon_form(m, m.cols(), true).pivots.size());
}

std::optional<std::vector<Rational>> linear_solve(const QMatrix& a,
                                                  const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("linear_solve: right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
    aug.set(r, a.cols(), -b[r]);
  }
  Echelon ech = echelon_form(aug, a.cols(), true);

  std::vector<char> pivoted(static_cast<std::size_t>(ech.rows.size()), 0);
  for (const auto& [r, c] : ech.pivots) pivoted[r] = 1;
  for (std::size_t r = 0; r < ech.rows.size(); ++r)
    if (!pivoted[r] && !ech.rows[r].empty()) return std::nullopt;  // 0 = nonzero rhs

  // augmented coordinate fixed to 1, free variables to 0
  std::vector<Rational> x(a.cols() + 1, Rational(0));
  x[a.cols()] = Rational(1);
  for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
    const auto& [pr, pc] = *it;
    Rational s(0);
    const Integer* diag = nullptr;
    for (const auto& [c, v] : ech.rows[pr]) {
      if (c == pc) {
        diag = &v;
        continue;
      }
      if (!x[c].is_zero()) s += Rational(v) * x[c];
    }
    x[pc] = -s / Rational(*diag);
  }
  x.resize(a.cols());
  return x;
}

}  // namespace orbitgf
