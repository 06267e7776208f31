#pragma once

#include <set>

#include "branecalc/morphism.hpp"

namespace branecalc {

/// A free graded-commutative algebra with a degree +1 differential derivation
/// satisfying d∘d = 0.
struct SullivanModel {
  AlgebraPtr algebra;
  Derivation d;

  Element diff(const Element& a) const { return d.apply(a); }
  /// Name of the first generator with d(d(g)) != 0, if any.
  std::optional<std::string> d_squared_witness() const;
  void require_d_squared_zero(const std::string& context) const;
};

/// Builds a model with zero differential on the given generators.
SullivanModel make_model(std::vector<Generator> gens);

struct PurityResult {
  bool pure = false;
  std::string witness;  // violating generator when not pure
};

/// d vanishes on even generators and sends odd generators into the
/// subalgebra on even generators.
PurityResult check_pure(const SullivanModel& m);

/// True iff no generator has degree <= k.
bool check_k_connected(const SullivanModel& m, int k);

/// Even/odd generator indices of a pure model, in declaration order.
std::vector<std::size_t> even_generators(const SullivanModel& m);
std::vector<std::size_t> odd_generators(const SullivanModel& m);

struct Amalgamation {
  SullivanModel model;
  AlgebraMorphism left, right;  // inclusions of the two factors
};

/// Free product of A and B with the named generators identified once.
/// Shared names must agree in degree and differential. Result generators:
/// A's in order, then B's non-shared in order.
Amalgamation tensor_amalgamated(const SullivanModel& A, const SullivanModel& B,
                                const std::vector<std::string>& shared_names);

struct Quotient {
  SullivanModel model;
  AlgebraMorphism projection;
};

/// Kills the listed generators. Requires d(g) to project to zero for every
/// killed g, so that the projection is a chain algebra map.
Quotient quotient_by_generators(const SullivanModel& A,
                                const std::set<std::string>& killed);

/// Same model with generators renamed; second component is the iso A -> renamed.
std::pair<SullivanModel, AlgebraMorphism> rename_generators(
    const SullivanModel& A, const std::map<std::string, std::string>& names);

}  // namespace branecalc
