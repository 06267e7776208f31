#pragma once

#include <functional>

#include "branecalc/shriek.hpp"

namespace branecalc {

enum class SectionMode { Explicit, Solver, Auto };

/// One of the composed operation pipelines, evaluable on elements of the
/// source algebra. Satisfies d∘action = (−1)^{degree_shift} action∘d.
struct BraneOperation {
  std::string kind;  // "coproduct_dual" | "product_dual" | "composite"
  SullivanModel source, target;
  int degree_shift = 0;
  std::function<Element(const Element&)> action;

  Element apply(const Element& a) const { return action(a); }
};

/// All models and maps needed by both pipelines for one (ΛV, k), built once
/// and shared so that δ^∨ and μ^∨ compose on identical algebra objects.
struct BraneEngine {
  SullivanModel base;
  int k = 0;
  int n_max = 0;
  SphereFamily fam;

  // coproduct side: E = M(D^k) ⊗_{M(S^{k−1})} M(T^{(k)})
  SullivanModel E;
  AlgebraMorphism eps_tilde_id;  // E → M(T)/(s^{k−1}V)
  AlgebraMorphism phi;           // section of eps_tilde_id
  ShriekMap gamma;               // on its own disk model
  ModuleMorphism gamma_id;       // γ⊗id : E → M(T)

  // product side: F = M(I) ⊗_ΛV M(S^k), Z = M(I) ⊗_{ΛV⊗2} F
  SullivanModel F, Z;
  AlgebraMorphism ebar_id;  // Z → U, the surjection ε̄⊗id
  AlgebraMorphism psi;      // section of ebar_id
  ShriekMap eta;            // on its own path model
  ModuleMorphism eta_id;    // η⊗id : Z → F
  AlgebraMorphism ebar_F;   // F → M(S^k)
};

BraneEngine build_brane_engine(const SullivanModel& m, int k, int n_max = -1,
                               SectionMode mode = SectionMode::Auto,
                               const Rational& gamma_scale = 1,
                               const Rational& eta_scale = 1);

/// δ^∨ : M(S^k) → M(T^{(k)}), degree shift m̄.
BraneOperation brane_coproduct_dual(const BraneEngine& eng);
/// μ^∨ : M(T^{(k)}) → M(S^k), degree shift m.
BraneOperation brane_product_dual(const BraneEngine& eng);

BraneOperation brane_coproduct_dual(const SullivanModel& m, int k, int n_max = -1,
                                    SectionMode mode = SectionMode::Auto);
BraneOperation brane_product_dual(const SullivanModel& m, int k, int n_max = -1,
                                  SectionMode mode = SectionMode::Auto);

struct CompositeReport {
  bool nontrivial = false;
  /// Basis elements with nonzero non-exact cocycle image, up to n_max.
  std::vector<std::pair<Monomial, Element>> witnesses;
};
struct CompositeResult {
  BraneOperation op;
  CompositeReport report;
};

/// The composite δ^∨∘μ^∨ : M(T^{(k)}) → M(T^{(k)}) (the dual of μ∘δ), with
/// the nontriviality report over all source basis elements of degree ≤ n_max.
CompositeResult compose_operations(const BraneOperation& delta,
                                   const BraneOperation& mu, int n_max);

/// d∘op = (−1)^{degree_shift} op∘d on every source basis element of degree
/// ≤ n_max; the witness receives the offending monomial on failure.
bool operation_is_chain_map(const BraneOperation& op, int n_max,
                            std::string* witness = nullptr);

/// The full invariant battery for one (ΛV, k): d² = 0 on every built model,
/// structure maps and sections, D(γ) = D(η) = 0, operation chain maps,
/// quasi-isomorphism spot checks for ε̃ and ε̄, and (when the explicit ψ
/// applies) solver/explicit agreement on cohomology classes.
struct VerifyReport {
  struct Check {
    std::string name;
    bool ok = false;
    std::string detail;  // failure explanation when !ok
  };
  std::vector<Check> checks;
  bool all_ok = true;
  std::string first_failure;
};
VerifyReport run_verify_suite(const SullivanModel& m, int k, int n_max = -1);

}  // namespace branecalc
