#pragma once

#include "branecalc/element.hpp"

namespace branecalc {

/// A degree-d linear operator determined by generator images and extended by
/// the graded Leibniz rule theta(ab) = theta(a)b + (-1)^{|theta||a|} a theta(b).
/// Images must be total before apply(); a missing image is an error, not an
/// implicit zero.
class Derivation {
public:
  Derivation() = default;
  Derivation(AlgebraPtr alg, int degree);

  const AlgebraPtr& algebra() const { return alg_; }
  int degree() const { return degree_; }

  /// Image must be homogeneous of degree degree(g) + degree(theta), or zero.
  void set_image(std::size_t i, Element value);
  void set_image(std::string_view name, Element value);
  bool has_image(std::size_t i) const { return images_[i].has_value(); }
  const Element& image(std::size_t i) const;

  Element apply(const Element& a) const;
  Element apply_monomial(const Monomial& m) const;

private:
  AlgebraPtr alg_;
  int degree_ = 0;
  std::vector<std::optional<Element>> images_;
};

}  // namespace branecalc
