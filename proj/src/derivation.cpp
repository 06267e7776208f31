#include "branecalc/derivation.hpp"

namespace branecalc {

Derivation::Derivation(AlgebraPtr alg, int degree)
    : alg_(std::move(alg)), degree_(degree), images_(alg_->size()) {}

void Derivation::set_image(std::size_t i, Element value) {
  if (!value.is_zero()) {
    require_same_algebra(alg_, value.algebra(), "derivation image");
    int expect = alg_->gen(i).degree + degree_;
    auto d = value.homogeneous_degree();
    if (d && *d != expect)
      throw input_error("image of '" + alg_->gen(i).name + "' has degree " +
                        std::to_string(*d) + ", expected " + std::to_string(expect));
  }
  images_[i] = std::move(value);
}

void Derivation::set_image(std::string_view name, Element value) {
  set_image(alg_->index_of(name), std::move(value));
}

const Element& Derivation::image(std::size_t i) const {
  if (!images_[i])
    throw input_error("derivation has no image for generator '" +
                      alg_->gen(i).name + "'");
  return *images_[i];
}

Element Derivation::apply_monomial(const Monomial& m) const {
  Element out(alg_);
  int prefix_parity = 0;  // parity of the degree of the factors left of i
  for (std::size_t i = 0; i < alg_->size(); ++i) {
    int e = m.exp[i];
    if (e == 0) continue;
    const Element& img = image(i);
    if (!img.is_zero()) {
      Monomial left = alg_->one(), right = alg_->one();
      for (std::size_t u = 0; u < i; ++u) left.exp[u] = m.exp[u];
      right.exp[i] = e - 1;
      for (std::size_t u = i + 1; u < alg_->size(); ++u) right.exp[u] = m.exp[u];
      int sign = (degree_ % 2 != 0 && prefix_parity != 0) ? -1 : 1;
      Element term = Element::term(alg_, left, Rational(sign) * e) * img *
                     Element::term(alg_, right, 1);
      out += term;
    }
    prefix_parity = (prefix_parity + e * alg_->gen(i).degree) % 2;
  }
  return out;
}

Element Derivation::apply(const Element& a) const {
  if (a.is_zero()) return Element::zero(alg_);
  require_same_algebra(alg_, a.algebra(), "derivation apply");
  Element out(alg_);
  for (const auto& [m, c] : a.terms()) out += apply_monomial(m) * c;
  return out;
}

}  // namespace branecalc
