#include "orbitgf/vectorfield.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitgf {

PolyVectorField::PolyVectorField(std::vector<std::string> vars, std::vector<MultiPoly> comps)
    : variables(std::move(vars)), components(std::move(comps)) {
  if (components.size() != variables.size())
    throw std::invalid_argument("PolyVectorField: one component per variable required");
  for (const auto& c : components)
    if (c.variables() != variables)
      throw std::invalid_argument("PolyVectorField: component variable list differs");
}

PolyVectorField PolyVectorField::zero(std::vector<std::string> vars) {
  std::vector<MultiPoly> comps(vars.size(), MultiPoly(vars));
  return PolyVectorField(std::move(vars), std::move(comps));
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

int PolyVectorField::degree() const {
  int d = 0;
  for (const auto& c : components)
    if (!c.is_zero()) d = std::max(d, c.degree());
  return d;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (variables != o.variables)
    throw std::invalid_argument("PolyVectorField: variable lists differ");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += o.components[i];
  return *this;
}

PolyVectorField PolyVectorField::scaled(const Rational& c) const {
  PolyVectorField r = *this;
  for (auto& comp : r.components) comp = comp.scaled(c);
  return r;
}

PolyVectorField PolyVectorField::times(const MultiPoly& q) const {
  PolyVectorField r = *this;
  for (auto& comp : r.components) comp = comp * q;
  return r;
}

std::string PolyVectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << components[i].str() << ")*d/d" << variables[i];
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace orbitgf
