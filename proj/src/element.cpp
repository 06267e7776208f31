#include "branecalc/element.hpp"

#include <algorithm>

namespace branecalc {

Element Element::unit(AlgebraPtr alg) {
  Element e(alg);
  e.terms_.emplace(alg->one(), 1);
  return e;
}

Element Element::generator(AlgebraPtr alg, std::size_t i) {
  Element e(alg);
  e.terms_.emplace(alg->gen_monomial(i), 1);
  return e;
}

Element Element::generator(AlgebraPtr alg, std::string_view name) {
  std::size_t i = alg->index_of(name);
  return generator(std::move(alg), i);
}

Element Element::term(AlgebraPtr alg, Monomial m, Rational c) {
  Element e(std::move(alg));
  e.add_term(m, c);
  return e;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  else if (!o.terms_.empty()) require_same_algebra(alg_, o.alg_, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element& Element::operator-=(const Element& o) {
  *this += -o;
  return *this;
}

Element Element::operator-() const {
  Element r(alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::operator*(const Rational& c) const {
  Element r(alg_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Element Element::operator*(const Element& o) const {
  if (terms_.empty()) return *this;
  if (o.terms_.empty()) return o;
  require_same_algebra(alg_, o.alg_, "multiply");
  Element r(alg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      auto prod = alg_->multiply(ma, mb);
      if (!prod) continue;
      r.add_term(prod->second, ca * cb * prod->first);
    }
  return r;
}

Element Element::pow(int e) const {
  if (e < 0) throw input_error("negative exponent");
  Element r = Element::unit(alg_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Element::operator==(const Element& o) const { return terms_ == o.terms_; }

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = alg_->degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (alg_->degree(m) != d)
      throw input_error("element is not homogeneous: " + str());
  return d;
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = alg_->degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return alg_->degree(t.first) == d; });
}

Rational Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) {
    return alg_->mono_less(a->first, b->first);
  });
  std::string s;
  for (auto* t : sorted) {
    Rational c = t->second;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool trivial_mono = t->first.is_one();
    if (c != 1 || trivial_mono) {
      s += rational_str(c);
      if (!trivial_mono) s += ' ';
    }
    if (!trivial_mono) s += alg_->mono_str(t->first);
  }
  return s;
}

}  // namespace branecalc
