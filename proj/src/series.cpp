#include "orbitgf/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orbitgf/matrix.hpp"

namespace orbitgf {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::one() { return UniPoly({Rational(1)}); }

UniPoly UniPoly::one_minus_power(int k) {
  if (k < 1) throw std::invalid_argument("one_minus_power: k must be >= 1");
  std::vector<Rational> c(k + 1, Rational(0));
  c[0] = Rational(1);
  c[k] = Rational(-1);
  return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational UniPoly::eval_at_one() const {
  Rational s(0);
  for (const auto& v : c_) s += v;
  return s;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v = -v;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return UniPoly(std::move(r));
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  if (is_zero()) return UniPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(degree() - d.degree() + 1, Rational(0));
  const Rational lead = d.c_.back();
  for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
    if (rem[i].is_zero()) continue;
    Rational q = rem[i] / lead;
    quot[i - d.degree()] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
  }
  for (const auto& v : rem)
    if (!v.is_zero()) return std::nullopt;
  return UniPoly(std::move(quot));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != Rational(1)) os << a.str();
    if (i > 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly cyclotomic_factor(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_factor: d must be >= 1");
  UniPoly value = UniPoly::one_minus_power(d);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) value = *value.divide_exact(cyclotomic_factor(e));  // exact by construction
  return value;
}

RationalGF RationalGF::zero() { return RationalGF{UniPoly(), {}}; }

RationalGF RationalGF::from_den(std::vector<std::pair<int, int>> den) {
  RationalGF gf{UniPoly::one(), std::move(den)};
  std::sort(gf.den.begin(), gf.den.end());
  return gf;
}

UniPoly RationalGF::den_poly() const {
  UniPoly d = UniPoly::one();
  for (const auto& [k, m] : den)
    for (int i = 0; i < m; ++i) d = d * UniPoly::one_minus_power(k);
  return d;
}

std::string RationalGF::str() const {
  std::ostringstream os;
  os << "(" << num.str() << ")";
  for (const auto& [k, m] : den) {
    os << " / (1-t";
    if (k > 1) os << "^" << k;
    os << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

namespace {

// multiplicity of the cyclotomic factor for index d in p
int cyclotomic_multiplicity(const UniPoly& p, int d) {
  int mult = 0;
  UniPoly cur = p;
  while (true) {
    auto q = cur.divide_exact(cyclotomic_factor(d));
    if (!q) return mult;
    cur = *q;
    ++mult;
  }
}

}  // namespace

RationalGF canonical_form(RationalGF gf) {
  if (gf.num.is_zero()) return RationalGF::zero();
  std::sort(gf.den.begin(), gf.den.end());

  // cyclotomic multiplicities demanded by the denominator multiset
  std::map<int, int> need;
  for (const auto& [k, m] : gf.den)
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) need[d] += m;

  // cancel what the numerator provides
  UniPoly num = gf.num;
  for (auto& [d, count] : need) {
    if (count == 0) continue;
    int have = cyclotomic_multiplicity(num, d);
    int cancel = std::min(have, count);
    for (int i = 0; i < cancel; ++i) num = *num.divide_exact(cyclotomic_factor(d));
    count -= cancel;
  }

  // re-assemble (1-t^k) factors, greedily covering the largest remaining
  // cyclotomic index; any overshoot multiplies back into the numerator
  std::vector<std::pair<int, int>> den;
  while (true) {
    int dmax = 0;
    for (const auto& [d, count] : need)
      if (count > 0) dmax = std::max(dmax, d);
    if (dmax == 0) break;
    int m = need[dmax];
    den.emplace_back(dmax, m);
    for (int d = 1; d <= dmax; ++d)
      if (dmax % d == 0) need[d] -= m;
  }
  for (const auto& [d, count] : need)
    if (count < 0)
      for (int i = 0; i < -count; ++i) num = num * cyclotomic_factor(d);
  std::sort(den.begin(), den.end());
  return RationalGF{std::move(num), std::move(den)};
}

std::vector<long long> increments(const DimSeries& dims) {
  std::vector<long long> out;
  out.reserve(dims.values.size());
  for (std::size_t i = 0; i < dims.values.size(); ++i)
    out.push_back(i == 0 ? dims.values[0] : dims.values[i] - dims.values[i - 1]);
  return out;
}

std::vector<long long> prefix_sums(const std::vector<long long>& incr) {
  std::vector<long long> out;
  out.reserve(incr.size());
  long long acc = 0;
  for (long long v : incr) out.push_back(acc += v);
  return out;
}

namespace {

// partitions of `total` into parts <= max_part, largest part first
void enumerate_partitions(int total, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::pair<int, int>> to_multiset(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int p : parts) m[p] += 1;
  return {m.begin(), m.end()};
}

// coefficients of D*G for the available data length
std::vector<Rational> denominator_times_series(const UniPoly& d,
                                               const std::vector<long long>& g) {
  std::vector<Rational> p(g.size(), Rational(0));
  for (std::size_t m = 0; m < g.size(); ++m) {
    Rational s(0);
    for (int j = 0; j <= d.degree() && j <= static_cast<int>(m); ++j)
      s += d.coeff(j) * Rational(g[m - j]);
    p[m] = s;
  }
  return p;
}

}  // namespace

RationalGF reconstruct_gf(const std::vector<long long>& incr, int max_den_degree, int window) {
  if (max_den_degree < 0 || window < 0)
    throw std::invalid_argument("reconstruct_gf: negative parameter");
  const int len = static_cast<int>(incr.size());
  const int fit_len = len - window;
  if (fit_len < 1)
    throw ReconstructError(ReconstructFailure::NoRecurrence,
                           "reconstruct_gf: too few data points for the requested window");

  // primary pass: candidate cyclotomic denominators in ascending degree
  for (int deg = 0; deg <= max_den_degree; ++deg) {
    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    enumerate_partitions(deg, std::max(deg, 1), cur, partitions);
    for (const auto& parts : partitions) {
      auto multiset = to_multiset(parts);
      UniPoly d = UniPoly::one();
      for (int k : parts) d = d * UniPoly::one_minus_power(k);
      std::vector<Rational> p = denominator_times_series(d, incr);
      bool window_ok = true;
      for (int m = fit_len; m < len; ++m)
        if (!p[m].is_zero()) {
          window_ok = false;
          break;
        }
      if (!window_ok) continue;
      p.resize(fit_len);
      return canonical_form(RationalGF{UniPoly(std::move(p)), std::move(multiset)});
    }
  }

  // diagnostic pass: minimal unrestricted linear recurrence on the fit region
  for (int r = 0; r <= max_den_degree; ++r) {
    const int neq = fit_len - r;
    if (neq < 0) continue;
    QMatrix a(neq, r);
    std::vector<Rational> b(neq, Rational(0));
    for (int m = r; m < fit_len; ++m) {
      for (int s = 1; s <= r; ++s) a.set(m - r, s - 1, Rational(incr[m - s]));
      b[m - r] = Rational(-incr[m]);
    }
    auto sol = linear_solve(a, b);
    if (!sol) continue;
    std::vector<Rational> dcoeffs(r + 1, Rational(0));
    dcoeffs[0] = Rational(1);
    for (int s = 1; s <= r; ++s) dcoeffs[s] = (*sol)[s - 1];
    UniPoly d(std::move(dcoeffs));
    std::vector<Rational> p = denominator_times_series(d, incr);
    for (int m = fit_len; m < len; ++m)
      if (!p[m].is_zero())
        throw ReconstructError(
            ReconstructFailure::WindowMismatch,
            "reconstruct_gf: fitted recurrence of order " + std::to_string(r) +
                " fails to predict the withheld entries");
    throw ReconstructError(
        ReconstructFailure::NonCyclotomicDenominator,
        "reconstruct_gf: recurrence of order " + std::to_string(r) +
            " fits but its denominator has no (1-t^k) factorization within the bound");
  }
  throw ReconstructError(ReconstructFailure::NoRecurrence,
                         "reconstruct_gf: no linear recurrence of order <= " +
                             std::to_string(max_den_degree) + " fits the data");
}

namespace {

int raw_pole_order_at_one(const RationalGF& gf) {
  int total = 0;
  for (const auto& [k, m] : gf.den) total += m;
  return total - cyclotomic_multiplicity(gf.num, 1);
}

}  // namespace

DdimResult ddim(const RationalGF& gf) {
  if (gf.is_zero()) return {0, false};
  int raw = raw_pole_order_at_one(gf);
  return {std::max(raw, 0), raw < 0};
}

Rational ddeg(const RationalGF& gf) {
  if (gf.is_zero()) return Rational(0);
  UniPoly reduced = gf.num;
  int num_ones = 0;
  while (true) {
    auto q = reduced.divide_exact(cyclotomic_factor(1));
    if (!q) break;
    reduced = *q;
    ++num_ones;
  }
  int total = 0;
  for (const auto& [k, m] : gf.den) total += m;
  const int order_at_one = total - num_ones;

  // every other unit-circle pole must have strictly smaller order
  std::map<int, int> pole;  // cyclotomic index d >= 2 -> order
  for (const auto& [k, m] : gf.den)
    for (int d = 2; d <= k; ++d)
      if (k % d == 0) pole[d] += m;
  for (auto& [d, p] : pole) {
    p -= cyclotomic_multiplicity(gf.num, d);
    if (p >= order_at_one)
      throw DominanceError("ddeg: pole at a primitive root of unity of index " +
                           std::to_string(d) + " has order " + std::to_string(p) +
                           " >= order " + std::to_string(order_at_one) + " at t=1");
  }

  // (1-t)^order * gf at t=1: the (1-t) factors cancel, each remaining
  // (1+t+...+t^{k-1}) evaluates to k
  Rational value = reduced.eval_at_one();
  for (const auto& [k, m] : gf.den)
    for (int i = 0; i < m; ++i) value /= Rational(k);
  return value;
}

RationalGF product_gf(const RationalGF& a, const RationalGF& b) {
  RationalGF out;
  out.num = a.num * b.num;
  out.den = a.den;
  for (const auto& [k, m] : b.den) {
    bool merged = false;
    for (auto& [k2, m2] : out.den)
      if (k2 == k) {
        m2 += m;
        merged = true;
        break;
      }
    if (!merged) out.den.emplace_back(k, m);
  }
  return canonical_form(std::move(out));
}

std::vector<long long> product_gf(const std::vector<long long>& a,
                                  const std::vector<long long>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<long long> out(len, 0);
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t i = 0; i <= n; ++i) out[n] += a[i] * b[n - i];
  return out;
}

std::vector<Rational> gf_expand(const RationalGF& gf, int len) {
  std::vector<Rational> out(len, Rational(0));
  for (int i = 0; i < len && i <= gf.num.degree(); ++i) out[i] = gf.num.coeff(i);
  for (const auto& [k, m] : gf.den)
    for (int rep = 0; rep < m; ++rep)
      for (int i = k; i < len; ++i) out[i] += out[i - k];
  return out;
}

}  // namespace orbitgf
