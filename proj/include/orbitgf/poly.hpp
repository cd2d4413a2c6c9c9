#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitgf/rational.hpp"

namespace orbitgf {

/// Exponent vector of a monomial. Entries are natural numbers for MultiPoly
/// and arbitrary integers for LaurentPoly.
using Exponents = std::vector<int>;

/// Graded-lexicographic order: total degree first, then lexicographic.
/// Used for all term maps so iteration order is canonical.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/// All exponent vectors in `nvars` variables with total degree <= max_deg,
/// listed in graded-lexicographic order.
std::vector<Exponents> monomials_up_to(int nvars, int max_deg);

/// Sparse multivariate polynomial over the rationals with a named,
/// ordered variable list. Zero coefficients are never stored.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  MultiPoly() = default;  // zero polynomial in zero variables
  explicit MultiPoly(std::vector<std::string> variables);
  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, int index);
  static MultiPoly monomial(std::vector<std::string> variables, const Exponents& e,
                            const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max exponent-vector sum; 0 for the zero polynomial by convention.
  int degree() const;
  Rational coeff(const Exponents& e) const;

  /// Adds c*x^e, dropping the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;

  Rational eval(const std::vector<Rational>& point) const;
  /// Substitutes images[i] for variable i; images share one variable list.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  MultiPoly derivative(int var) const;

  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Identical variable lists required; throws std::invalid_argument otherwise.
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

/// Per-variable exponent bounds for truncated Laurent products.
struct ExpBox {
  Exponents lo, hi;
  static ExpBox centered(int nvars, int radius);
  static ExpBox zero(int nvars);
  bool contains(const Exponents& e) const;
};

/// Sparse Laurent polynomial (integer exponents) over the rationals.
class LaurentPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);
  static LaurentPoly constant(std::vector<std::string> variables, const Rational& c);
  static LaurentPoly monomial(std::vector<std::string> variables, const Exponents& e,
                              const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;

  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& c) const;
  /// Multiplication by the single monomial c*x^e.
  LaurentPoly shifted(const Exponents& e, const Rational& c) const;
  /// Negates every exponent vector (the conjugate character).
  LaurentPoly conjugate() const;

  bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Product with every term outside the box discarded. Exact within the box
/// provided the inputs are box-complete for the requested box; that is the
/// caller's responsibility.
LaurentPoly laurent_mul_truncated(const LaurentPoly& p, const LaurentPoly& q, const ExpBox& box);

}  // namespace orbitgf
