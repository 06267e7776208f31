#include "branecalc/morphism.hpp"

namespace branecalc {

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target,
                                 std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw input_error("morphism image count does not match generator count");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Element& img = images_[i];
    if (img.is_zero()) continue;
    require_same_algebra(target_, img.algebra(), "morphism image");
    auto d = img.homogeneous_degree();
    if (d && *d != source_->gen(i).degree)
      throw input_error("image of '" + source_->gen(i).name +
                        "' is not degree-preserving");
  }
}

AlgebraMorphism AlgebraMorphism::identity(const AlgebraPtr& alg) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < alg->size(); ++i)
    images.push_back(Element::generator(alg, i));
  return AlgebraMorphism(alg, alg, std::move(images));
}

AlgebraMorphism AlgebraMorphism::by_names(
    const AlgebraPtr& source, const AlgebraPtr& target,
    const std::map<std::string, std::string>& overrides) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < source->size(); ++i) {
    std::string name = source->gen(i).name;
    if (auto it = overrides.find(name); it != overrides.end()) name = it->second;
    if (name.empty())
      images.push_back(Element::zero(target));
    else
      images.push_back(Element::generator(target, name));
  }
  return AlgebraMorphism(source, target, std::move(images));
}

Element AlgebraMorphism::apply_monomial(const Monomial& m) const {
  Element out = Element::unit(target_);
  for (std::size_t i = 0; i < source_->size(); ++i)
    for (int e = 0; e < m.exp[i]; ++e) out = out * images_[i];
  return out;
}

Element AlgebraMorphism::apply(const Element& a) const {
  if (a.is_zero()) return Element::zero(target_);
  require_same_algebra(source_, a.algebra(), "morphism apply");
  Element out(target_);
  for (const auto& [m, c] : a.terms()) out += apply_monomial(m) * c;
  return out;
}

AlgebraMorphism AlgebraMorphism::then(const AlgebraMorphism& g) const {
  require_same_algebra(target_, g.source_, "morphism composition");
  std::vector<Element> images;
  for (const Element& img : images_) images.push_back(g.apply(img));
  return AlgebraMorphism(source_, g.target_, std::move(images));
}

bool AlgebraMorphism::chain_map(const Derivation& d_src, const Derivation& d_tgt,
                                std::string* witness) const {
  for (std::size_t i = 0; i < source_->size(); ++i) {
    Element lhs = apply(d_src.image(i));
    Element rhs = d_tgt.apply(images_[i]);
    if (!(lhs == rhs)) {
      if (witness) *witness = source_->gen(i).name;
      return false;
    }
  }
  return true;
}

ModuleMorphism::ModuleMorphism(AlgebraPtr source, AlgebraPtr target,
                               std::vector<bool> base, int degree, bool default_zero)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_(std::move(base)),
      degree_(degree),
      default_zero_(default_zero) {
  if (base_.size() != source_->size())
    throw input_error("base flag count does not match generator count");
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (base_[i] && target_->find(source_->gen(i).name) < 0)
      throw input_error("base generator '" + source_->gen(i).name +
                        "' is missing from the target algebra");
}

void ModuleMorphism::set_image(const Monomial& m, Element value) {
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (base_[i] && m.exp[i])
      throw input_error("module-basis monomial contains base generator '" +
                        source_->gen(i).name + "'");
  if (!value.is_zero()) {
    require_same_algebra(target_, value.algebra(), "module map image");
    auto d = value.homogeneous_degree();
    if (d && *d != source_->degree(m) + degree_)
      throw input_error("module map image degree mismatch on " + source_->mono_str(m));
  }
  images_[m] = std::move(value);
}

Element ModuleMorphism::image(const Monomial& m) const {
  auto it = images_.find(m);
  if (it != images_.end()) return it->second;
  if (default_zero_) return Element::zero(target_);
  throw input_error("module map has no image for module-basis monomial " +
                    source_->mono_str(m));
}

ModuleMorphism::Split ModuleMorphism::split(const Monomial& m) const {
  Split s{source_->one(), source_->one(), 1};
  for (std::size_t i = 0; i < source_->size(); ++i)
    (base_[i] ? s.base : s.module).exp[i] = m.exp[i];
  auto prod = source_->multiply(s.base, s.module);
  // base and module have disjoint support, so the product never vanishes
  s.sign = prod->first;
  return s;
}

Element ModuleMorphism::base_to_target(const Monomial& base_part) const {
  Monomial t = target_->one();
  for (std::size_t i = 0; i < source_->size(); ++i)
    if (base_part.exp[i]) t.exp[target_->index_of(source_->gen(i).name)] = base_part.exp[i];
  return Element::term(target_, t, 1);
}

Element ModuleMorphism::apply_monomial(const Monomial& m) const {
  Split s = split(m);
  Element img = image(s.module);
  if (img.is_zero()) return Element::zero(target_);
  int sign = s.sign;
  if (degree_ % 2 != 0 && source_->degree(s.base) % 2 != 0) sign = -sign;
  return base_to_target(s.base) * img * Rational(sign);
}

Element ModuleMorphism::apply(const Element& a) const {
  if (a.is_zero()) return Element::zero(target_);
  require_same_algebra(source_, a.algebra(), "module map apply");
  Element out(target_);
  for (const auto& [m, c] : a.terms()) out += apply_monomial(m) * c;
  return out;
}

ModuleMorphism ModuleMorphism::transport(const AlgebraPtr& new_source,
                                         const AlgebraPtr& new_target,
                                         std::vector<bool> new_base) const {
  ModuleMorphism out(new_source, new_target, std::move(new_base), degree_, default_zero_);
  AlgebraMorphism src_map = AlgebraMorphism::by_names(source_, new_source);
  AlgebraMorphism tgt_map = AlgebraMorphism::by_names(target_, new_target);
  for (const auto& [m, img] : images_) {
    Element key = src_map.apply(Element::term(source_, m, 1));
    if (key.term_count() != 1 || key.terms().begin()->second != 1)
      throw input_error("module map transport does not preserve monomials");
    out.set_image(key.terms().begin()->first, tgt_map.apply(img));
  }
  return out;
}

ModuleMorphism ModuleMorphism::scaled(const Rational& c) const {
  ModuleMorphism out(source_, target_, base_, degree_, default_zero_);
  for (const auto& [m, img] : images_) out.set_image(m, img * c);
  return out;
}

}  // namespace branecalc
