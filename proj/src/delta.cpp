#include "orbitgf/delta.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitgf {

DeltaDistribution::DeltaDistribution(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("DeltaDistribution: negative variable count");
}

DeltaDistribution DeltaDistribution::delta(int num_vars) {
  DeltaDistribution d(num_vars);
  d.add_term(Exponents(num_vars, 0), Rational(1));
  return d;
}

DeltaDistribution DeltaDistribution::basis(int num_vars, const Exponents& beta) {
  DeltaDistribution d(num_vars);
  d.add_term(beta, Rational(1));
  return d;
}

int DeltaDistribution::order() const {
  if (coeffs_.empty()) return -1;
  return total_degree(coeffs_.rbegin()->first);
}

Rational DeltaDistribution::coeff(const Exponents& beta) const {
  auto it = coeffs_.find(beta);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void DeltaDistribution::add_term(const Exponents& beta, const Rational& c) {
  if (static_cast<int>(beta.size()) != num_vars_)
    throw std::invalid_argument("DeltaDistribution: multi-index length mismatch");
  for (int b : beta)
    if (b < 0) throw std::invalid_argument("DeltaDistribution: negative multi-index");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DeltaDistribution& DeltaDistribution::operator+=(const DeltaDistribution& o) {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("DeltaDistribution: variable count mismatch");
  for (const auto& [b, c] : o.coeffs_) add_term(b, c);
  return *this;
}

DeltaDistribution DeltaDistribution::scaled(const Rational& c) const {
  DeltaDistribution r(num_vars_);
  if (c.is_zero()) return r;
  for (const auto& [b, a] : coeffs_) r.coeffs_.emplace(b, a * c);
  return r;
}

std::string DeltaDistribution::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*D[";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) os << ",";
      os << b[i];
    }
    os << "]";
  }
  return os.str();
}

DeltaDistribution apply_derivative(const DeltaDistribution& xi, int j) {
  if (j < 0 || j >= xi.num_vars())
    throw std::out_of_range("apply_derivative: variable index out of range");
  DeltaDistribution out(xi.num_vars());
  for (const auto& [b, c] : xi.coeffs()) {
    Exponents s = b;
    s[j] += 1;
    out.add_term(s, c);
  }
  return out;
}

DeltaDistribution apply_monomial(const DeltaDistribution& xi, const Exponents& a) {
  if (static_cast<int>(a.size()) != xi.num_vars())
    throw std::invalid_argument("apply_monomial: exponent length mismatch");
  DeltaDistribution out(xi.num_vars());
  for (const auto& [b, c0] : xi.coeffs()) {
    Exponents s = b;
    Rational c = c0;
    bool dead = false;
    for (std::size_t m = 0; m < a.size() && !dead; ++m) {
      for (int k = 0; k < a[m]; ++k) {
        if (s[m] == 0) {
          dead = true;  // index underflow annihilates the term
          break;
        }
        c *= Rational(-s[m]);
        s[m] -= 1;
      }
    }
    if (!dead) out.add_term(s, c);
  }
  return out;
}

DeltaDistribution apply_field(const PolyVectorField& v, const DeltaDistribution& xi) {
  if (v.nvars() != xi.num_vars())
    throw std::invalid_argument("apply_field: dimension mismatch");
  DeltaDistribution out(xi.num_vars());
  for (int j = 0; j < v.nvars(); ++j) {
    if (v.components[j].is_zero()) continue;
    DeltaDistribution dxi = apply_derivative(xi, j);
    for (const auto& [e, c] : v.components[j].terms())
      out += apply_monomial(dxi, e).scaled(c);
  }
  return out;
}

QMatrix kernel_constraint_matrix(const std::vector<PolyVectorField>& fields, int num_vars,
                                 int order) {
  for (const auto& f : fields)
    if (f.nvars() != num_vars)
      throw std::invalid_argument("kernel_constraint_matrix: field variable count mismatch");
  const std::vector<Exponents> basis = monomials_up_to(num_vars, order);
  const std::vector<Exponents> image = monomials_up_to(num_vars, order + 1);
  std::map<Exponents, int, GrlexLess> image_index;
  for (std::size_t i = 0; i < image.size(); ++i) image_index.emplace(image[i], static_cast<int>(i));

  const int nf = static_cast<int>(fields.size());
  QMatrix m(nf * static_cast<int>(image.size()), static_cast<int>(basis.size()));
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    DeltaDistribution xi = DeltaDistribution::basis(num_vars, basis[col]);
    for (int f = 0; f < nf; ++f) {
      DeltaDistribution img = apply_field(fields[f], xi);
      for (const auto& [gamma, c] : img.coeffs())
        m.add(f * static_cast<int>(image.size()) + image_index.at(gamma), col, c);
    }
  }
  return m;
}

DimSeries kernel_dimensions(const std::vector<PolyVectorField>& fields, int num_vars,
                            int max_order) {
  if (max_order < 0) throw std::invalid_argument("kernel_dimensions: negative max order");
  DimSeries out;
  out.values.reserve(max_order + 1);
  for (int n = 0; n <= max_order; ++n) {
    QMatrix m = kernel_constraint_matrix(fields, num_vars, n);
    out.values.push_back(m.cols() - rank(m));
    // the order filtration only grows
    if (n > 0 && out.values[n] < out.values[n - 1])
      throw std::logic_error("kernel_dimensions: dimension series decreased at order " +
                             std::to_string(n));
  }
  return out;
}

}  // namespace orbitgf
