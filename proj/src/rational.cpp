#include "orbitgf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace orbitgf {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_rational_literal(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t after = digits(i);
  if (after == i) return false;
  if (after == s.size()) return true;
  if (s[after] != '/') return false;
  std::size_t d0 = after + 1;
  std::size_t d1 = digits(d0);
  return d1 > d0 && d1 == s.size();
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  if (!valid_rational_literal(text))
    throw std::invalid_argument("not a rational literal: \"" + text + "\"");
  Rational r;
  r.v_ = mpq_class(text);
  if (r.v_.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
  r.v_.canonicalize();
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace orbitgf
