#pragma once

#include <string>
#include <vector>

#include "orbitgf/poly.hpp"

namespace orbitgf {

/// Polynomial vector field: one MultiPoly component per coordinate, all
/// sharing the variable list.
struct PolyVectorField {
  std::vector<std::string> variables;
  std::vector<MultiPoly> components;

  PolyVectorField() = default;
  PolyVectorField(std::vector<std::string> vars, std::vector<MultiPoly> comps);
  static PolyVectorField zero(std::vector<std::string> vars);

  int nvars() const { return static_cast<int>(variables.size()); }
  bool is_zero() const;
  /// Max component degree (0 for the zero field).
  int degree() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  PolyVectorField scaled(const Rational& c) const;
  /// Multiplies every component by the polynomial q.
  PolyVectorField times(const MultiPoly& q) const;

  bool operator==(const PolyVectorField& o) const {
    return variables == o.variables && components == o.components;
  }

  std::string str() const;
};

}  // namespace orbitgf
