#pragma once

#include "branecalc/cohomology.hpp"
#include "branecalc/mapping_spaces.hpp"

namespace branecalc {

/// A Hom-complex cocycle representing a shriek map, with its normalization
/// scalar. apply() includes the scalar.
struct ShriekMap {
  HomElement hom;
  Rational scale{1};

  int degree() const { return hom.degree; }
  Element apply(const Element& a) const { return hom.map.apply(a) * scale; }
};

/// γ: M(D^k) → M(S^{k−1}), M(S^{k−1})-linear, degree
/// m̄ = Σ_i(|x_i|−k+1) − Σ_j(|y_j|−k). Sends the full odd-suspension product
/// s^k y_1⋯s^k y_q to s^{k−1}x_1⋯s^{k−1}x_p and every other module-basis
/// monomial to 0; D(γ) = 0 is verified up to n_max.
struct GammaResult {
  ShriekMap gamma;
  MappingSpaceModel disk;    // source model
  MappingSpaceModel sphere;  // target model M(S^{k−1})
};
GammaResult build_shriek_constant(const SullivanModel& m, int k, int n_max = -1);

/// η: M(I) → ΛV⊗ΛV (the base subalgebra of the path model), ΛV⊗ΛV-linear,
/// degree m = Σ_j|y_j| − Σ_i(|x_i|−1). The top value
/// η(sx_1⋯sx_p) = ∏_j(1⊗y_j − y_j⊗1) is prescribed; the remaining values are
/// completed by solving D(η) = 0 degree-by-degree. Images are tabulated for
/// module-basis monomials of degree ≤ n_max+1 and D(η) = 0 is verified up to
/// n_max.
struct EtaResult {
  ShriekMap eta;
  MappingSpaceModel path;
  SullivanModel target;  // ΛV⊗ΛV with the restricted differential
};
EtaResult build_shriek_diagonal(const SullivanModel& m, int n_max = -1,
                                const PathNames& names = {});

int gorenstein_shift_mbar(const SullivanModel& m, int k);
int gorenstein_shift_m(const SullivanModel& m);

}  // namespace branecalc
