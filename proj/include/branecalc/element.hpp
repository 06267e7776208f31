#pragma once

#include <map>
#include <optional>

#include "branecalc/algebra.hpp"

namespace branecalc {

/// A finite rational linear combination of normal-form monomials in one
/// FreeGCA. Zero coefficients are never stored; equality is term-map equality.
class Element {
public:
  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Element zero(AlgebraPtr alg) { return Element(std::move(alg)); }
  static Element unit(AlgebraPtr alg);
  static Element generator(AlgebraPtr alg, std::size_t i);
  static Element generator(AlgebraPtr alg, std::string_view name);
  static Element term(AlgebraPtr alg, Monomial m, Rational c);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Rational& c) const;
  Element operator*(const Element& o) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  bool operator==(const Element& o) const;

  Element pow(int e) const;

  /// Degree when homogeneous (nullopt for 0); throws input_error otherwise.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  Rational coeff(const Monomial& m) const;

  /// Terms in graded-lex order, e.g. "x^2 + -1/2 s1x^1 s2x^1" -> rendered
  /// as "x^2 - 1/2 s1x^1 s2x^1"; "0" for the zero element.
  std::string str() const;

private:
  AlgebraPtr alg_;
  std::map<Monomial, Rational> terms_;
};

inline Element operator*(const Rational& c, const Element& e) { return e * c; }

}  // namespace branecalc
