#pragma once

#include "branecalc/linalg.hpp"
#include "branecalc/model.hpp"

namespace branecalc {

/// One degree of a model as a based vector space, with the differential into
/// the next degree as a sparse matrix (rows: degree n+1 basis, columns:
/// degree n basis).
struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> basis;       // graded-lex order
  std::vector<Monomial> next_basis;  // degree + 1
  SparseMatrix matrix_of_d;
};

DegreeSlice build_slice(const SullivanModel& m, int n);

/// Coordinates of a homogeneous element in an ordered monomial basis.
/// Throws verify_error when a term falls outside the basis.
std::vector<Rational> coords_in_basis(const Element& a,
                                      const std::vector<Monomial>& basis);

/// dim H^0..H^n_max over Q.
std::vector<int> cohomology_dims(const SullivanModel& m, int n_max);

/// True iff d(a) = 0. `a` must be homogeneous (zero counts).
bool is_cocycle(const Element& a, const SullivanModel& m);

/// Witness z with d(z) = a, or nullopt when a is not exact. `a` must be a
/// homogeneous cocycle.
std::optional<Element> coboundary_preimage(const Element& a, const SullivanModel& m);

/// An element of the Hom complex of base-linear maps.
struct HomElement {
  ModuleMorphism map;
  int degree = 0;
};

/// D(f) = d_tgt∘f − (−1)^{|f|} f∘d_src, tabulated on every module-basis
/// monomial of degree ≤ n_max. When f stores explicit images they must cover
/// module-basis monomials of degree ≤ n_max + 1.
HomElement hom_differential(const HomElement& f, const Derivation& d_src,
                            const Derivation& d_tgt, int n_max);

/// D(f) = 0 on all module-basis monomials of degree ≤ n_max; on failure the
/// witness receives the offending monomial.
bool hom_is_cocycle(const HomElement& f, const Derivation& d_src,
                    const Derivation& d_tgt, int n_max,
                    std::string* witness = nullptr);

/// Lift f through the surjective quasi-isomorphism p: for each generator g of
/// `src` (in non-decreasing degree), solves { d(z) = φ(dg), p(z) = f(g) } in
/// the degree-|g| slice of `through`. The result satisfies p∘φ = f and is a
/// chain map; both are re-verified.
AlgebraMorphism lift_through_surjection(const SullivanModel& src,
                                        const AlgebraMorphism& f,
                                        const SullivanModel& through,
                                        const AlgebraMorphism& p, int n_max);

/// Module-basis monomials (non-base generators only) of degree 0..n_max,
/// graded-lex within each degree.
std::vector<Monomial> module_basis_up_to(const FreeGCA& alg,
                                         const std::vector<bool>& base, int n_max);

int default_truncation(const SullivanModel& m);

}  // namespace branecalc
