#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "branecalc/common.hpp"

namespace branecalc {

/// A named generator of a free graded-commutative algebra.
/// susp_level = 0 marks a base generator; a suspended generator s^l v
/// carries level l and the name of its parent v.
struct Generator {
  std::string name;
  int degree = 0;
  int susp_level = 0;
  std::string parent;
};

/// Exponent vector over the generators of one algebra, in generator order.
/// Odd-degree generators never carry an exponent above 1.
struct Monomial {
  std::vector<int> exp;

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const { return exp < o.exp; }
  bool is_one() const {
    for (int e : exp)
      if (e) return false;
    return true;
  }
};

class FreeGCA;
using AlgebraPtr = std::shared_ptr<const FreeGCA>;

/// The free graded-commutative algebra on an ordered list of generators.
/// Immutable; elements, derivations and morphisms hold a shared pointer to it.
class FreeGCA : public std::enable_shared_from_this<FreeGCA> {
public:
  static AlgebraPtr make(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& gen(std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& gens() const { return gens_; }
  bool odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }

  /// Index of a generator by name, or -1.
  int find(std::string_view name) const;
  /// Index of a generator by name; throws input_error when absent.
  std::size_t index_of(std::string_view name) const;

  int degree(const Monomial& m) const;
  Monomial one() const { return Monomial{std::vector<int>(gens_.size(), 0)}; }
  Monomial gen_monomial(std::size_t i) const;

  /// Product of two normal-form monomials. Returns the Koszul sign (+1/-1)
  /// and the merged monomial, or nullopt when an odd generator squares to 0.
  std::optional<std::pair<int, Monomial>> multiply(const Monomial& a,
                                                   const Monomial& b) const;

  /// Graded-lexicographic order used for bases and serialization:
  /// lower degree first, then higher exponent on earlier generators first.
  bool mono_less(const Monomial& a, const Monomial& b) const;

  std::string mono_str(const Monomial& m) const;

private:
  explicit FreeGCA(std::vector<Generator> gens);
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// All monomials of total degree n, in graded-lex order. When `allowed` is
/// given, only generators flagged true may appear.
std::vector<Monomial> monomials_of_degree(const FreeGCA& alg, int n,
                                          const std::vector<bool>* allowed = nullptr);

inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b,
                                 const char* what) {
  if (a.get() != b.get())
    throw input_error(std::string(what) + ": operands belong to different algebras");
}

}  // namespace branecalc
