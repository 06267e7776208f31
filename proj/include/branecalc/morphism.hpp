#pragma once

#include "branecalc/derivation.hpp"

namespace branecalc {

/// A graded algebra map determined by generator images (multiplicative,
/// degree-preserving, f(1) = 1).
class AlgebraMorphism {
public:
  AlgebraMorphism() = default;
  AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

  static AlgebraMorphism identity(const AlgebraPtr& alg);
  /// Sends each source generator to the target generator of the same name.
  /// Names listed in `overrides` are redirected; names mapped to "" go to 0.
  static AlgebraMorphism by_names(
      const AlgebraPtr& source, const AlgebraPtr& target,
      const std::map<std::string, std::string>& overrides = {});

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Element& image(std::size_t i) const { return images_[i]; }

  Element apply(const Element& a) const;
  Element apply_monomial(const Monomial& m) const;
  AlgebraMorphism then(const AlgebraMorphism& g) const;

  /// f∘d = d∘f on every generator.
  bool chain_map(const Derivation& d_src, const Derivation& d_tgt,
                 std::string* witness = nullptr) const;

private:
  AlgebraPtr source_, target_;
  std::vector<Element> images_;
};

/// A base-linear map between free modules over a common coefficient algebra,
/// determined by images of module-basis monomials (monomials in the
/// non-base generators). Applying to b*m with b in the base gives
/// (-1)^{|mu||b|} b * mu(m).
class ModuleMorphism {
public:
  ModuleMorphism() = default;
  ModuleMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<bool> base,
                 int degree, bool default_zero = false);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  int degree() const { return degree_; }
  const std::vector<bool>& base_flags() const { return base_; }
  bool default_zero() const { return default_zero_; }
  const std::map<Monomial, Element>& images() const { return images_; }

  /// `m` must be supported on non-base generators only; value homogeneous of
  /// degree deg(m) + degree(mu), or zero.
  void set_image(const Monomial& m, Element value);
  bool has_image(const Monomial& m) const { return images_.count(m) != 0; }
  /// Image of a module-basis monomial (respects default_zero).
  Element image(const Monomial& m) const;

  Element apply(const Element& a) const;
  Element apply_monomial(const Monomial& m) const;

  /// Splits a source monomial into (base part, module part, Koszul sign s)
  /// with m = s * base * module.
  struct Split {
    Monomial base, module;
    int sign;
  };
  Split split(const Monomial& m) const;

  /// Rebuild the same map between algebras that contain the same generator
  /// names (transport along name-preserving inclusions).
  ModuleMorphism transport(const AlgebraPtr& new_source, const AlgebraPtr& new_target,
                           std::vector<bool> new_base) const;

  ModuleMorphism scaled(const Rational& c) const;

private:
  Element base_to_target(const Monomial& base_part) const;
  AlgebraPtr source_, target_;
  std::vector<bool> base_;
  int degree_ = 0;
  bool default_zero_ = false;
  std::map<Monomial, Element> images_;
};

}  // namespace branecalc
