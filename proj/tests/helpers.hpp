#pragma once

#include <string>
#include <vector>

#include "branecalc/model.hpp"

namespace bctest {

using namespace branecalc;

/// Λx with |x| = deg, zero differential (the K(Z, deg) model for even deg).
inline SullivanModel lambda_x(int deg, const std::string& name = "x") {
  return make_model({{name, deg, 0, ""}});
}

/// Λ(x, y) with dy = x^2 (the sphere S^{|x|} model for even |x|).
inline SullivanModel sphere_model(int xdeg) {
  AlgebraPtr a = FreeGCA::make({{"x", xdeg, 0, ""}, {"y", 2 * xdeg - 1, 0, ""}});
  Derivation d(a, 1);
  d.set_image("x", Element::zero(a));
  d.set_image("y", Element::generator(a, "x").pow(2));
  return SullivanModel{a, d};
}

/// Λ(x:4, x':6), zero differential.
inline SullivanModel two_even_model() {
  return make_model({{"x", 4, 0, ""}, {"x'", 6, 0, ""}});
}

/// Λ(x:4, y:7, x':6, y':11) with dy = x^2, dy' = x'^2.
inline SullivanModel product_spheres_model() {
  AlgebraPtr a = FreeGCA::make(
      {{"x", 4, 0, ""}, {"y", 7, 0, ""}, {"x'", 6, 0, ""}, {"y'", 11, 0, ""}});
  Derivation d(a, 1);
  d.set_image("x", Element::zero(a));
  d.set_image("y", Element::generator(a, "x").pow(2));
  d.set_image("x'", Element::zero(a));
  d.set_image("y'", Element::generator(a, "x'").pow(2));
  return SullivanModel{a, d};
}

inline Element gen(const AlgebraPtr& a, const std::string& name) {
  return Element::generator(a, name);
}

}  // namespace bctest
