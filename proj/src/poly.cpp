#include "orbitgf/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbitgf {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Exponents> monomials_up_to(int nvars, int max_deg) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(nvars), 0);
  for (int d = 0; d <= max_deg; ++d) {
    // lexicographic enumeration of compositions of d into nvars parts
    std::vector<Exponents> level;
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == nvars - 1 || nvars == 0) {
        if (nvars == 0) {
          if (remaining == 0) level.push_back({});
          return;
        }
        cur[pos] = remaining;
        level.push_back(cur);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        rec(pos + 1, remaining - v);
      }
    };
    if (nvars == 0) {
      if (d == 0) out.push_back({});
      continue;
    }
    rec(0, d);
    std::sort(level.begin(), level.end(), GrlexLess{});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

void check_exponents(const Exponents& e, int nvars, bool allow_negative) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("exponent vector length does not match variable count");
  if (!allow_negative)
    for (int x : e)
      if (x < 0) throw std::invalid_argument("negative exponent in polynomial term");
}

std::string render_terms(const std::vector<std::string>& vars,
                         const std::map<Exponents, Rational, GrlexLess>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest-degree terms first
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (!any_var || a != Rational(1)) {
      os << a.str();
      if (any_var) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, int index) {
  MultiPoly p(std::move(variables));
  if (index < 0 || index >= p.nvars()) throw std::out_of_range("MultiPoly::variable index");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, const Exponents& e,
                              const Rational& c) {
  MultiPoly p(std::move(variables));
  check_exponents(e, p.nvars(), false);
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  // grlex map: the last key has maximal total degree
  return total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  check_exponents(e, nvars(), false);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {
void require_same_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a != b) throw std::invalid_argument("polynomial variable lists differ");
}
}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_vars(vars_, o.vars_);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw std::invalid_argument("evaluation point length does not match variable count");
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    out += m;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("substitution image count does not match variable count");
  std::vector<std::string> target_vars =
      images.empty() ? std::vector<std::string>{} : images.front().variables();
  for (const auto& im : images) require_same_vars(target_vars, im.variables());
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars()) throw std::out_of_range("MultiPoly::derivative index");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(e[var]));
  }
  return r;
}

std::string MultiPoly::str() const { return render_terms(vars_, terms_); }

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

ExpBox ExpBox::centered(int nvars, int radius) {
  return ExpBox{Exponents(nvars, -radius), Exponents(nvars, radius)};
}

ExpBox ExpBox::zero(int nvars) { return ExpBox{Exponents(nvars, 0), Exponents(nvars, 0)}; }

bool ExpBox::contains(const Exponents& e) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < lo[i] || e[i] > hi[i]) return false;
  return true;
}

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Rational& c) {
  LaurentPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, const Exponents& e,
                                  const Rational& c) {
  LaurentPoly p(std::move(variables));
  check_exponents(e, p.nvars(), true);
  p.add_term(e, c);
  return p;
}

Rational LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  check_exponents(e, nvars(), true);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_vars(vars_, o.vars_);
  LaurentPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& e, const Rational& c) const {
  check_exponents(e, nvars(), true);
  LaurentPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [ea, ca] : terms_) {
    Exponents s(ea.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + e[i];
    r.terms_.emplace(s, ca * c);
  }
  return r;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents n(e.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = -e[i];
    r.terms_.emplace(n, c);
  }
  return r;
}

std::string LaurentPoly::str() const { return render_terms(vars_, terms_); }

LaurentPoly laurent_mul_truncated(const LaurentPoly& p, const LaurentPoly& q, const ExpBox& box) {
  if (p.variables() != q.variables())
    throw std::invalid_argument("polynomial variable lists differ");
  if (static_cast<int>(box.lo.size()) != p.nvars() ||
      static_cast<int>(box.hi.size()) != p.nvars())
    throw std::invalid_argument("exponent box size does not match variable count");
  LaurentPoly r(p.variables());
  for (const auto& [ea, ca] : p.terms())
    for (const auto& [eb, cb] : q.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (!box.contains(e)) continue;
      r.add_term(e, ca * cb);
    }
  return r;
}

}  // namespace orbitgf
