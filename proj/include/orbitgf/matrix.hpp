#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orbitgf/rational.hpp"

namespace orbitgf {

/// Sparse matrix over the rationals. Zero entries are never stored and
/// indices are bounds-checked. Immutable use after assembly is thread-safe.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long nnz() const;

  Rational get(int r, int c) const;
  void set(int r, int c, const Rational& v);
  /// Accumulates into (r, c), erasing the entry if the sum cancels.
  void add(int r, int c, const Rational& v);

  const std::map<int, Rational>& row(int r) const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  std::vector<Rational> mul_vec(const std::vector<Rational>& v) const;

  bool operator==(const QMatrix& o) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::map<int, Rational>> row_data_;
  void check(int r, int c) const;
};

/// Basis of {v : m v = 0}. Vectors are denominator-cleared (integer entries)
/// with content 1, one per free column in ascending column order; the entry
/// at the vector's own free column is positive. Deterministic: fixed pivot
/// rule, fraction-free row operations on integer rows.
///
/// nullspace() uses OpenMP for the row-update loops when available;
/// nullspace_serial() is the reference implementation kept for testing.
/// The two produce bitwise-identical output.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
std::vector<std::vector<Rational>> nullspace_serial(const QMatrix& m);

int rank(const QMatrix& m);

/// One exact solution of a x = b, or nullopt when inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> linear_solve(const QMatrix& a,
                                                  const std::vector<Rational>& b);

}  // namespace orbitgf
