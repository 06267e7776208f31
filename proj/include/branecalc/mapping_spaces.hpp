#pragma once

#include <functional>

#include "branecalc/model.hpp"

namespace branecalc {

/// A built model of a mapping space together with its named structure maps
/// (all verified chain maps) and the suspension derivations used to build it.
struct MappingSpaceModel {
  SullivanModel model;
  std::map<std::string, AlgebraMorphism> maps;
  std::map<std::string, Derivation> derivations;

  const AlgebraMorphism& map(const std::string& name) const;
  const Derivation& derivation(const std::string& name) const;
};

struct PathNames {
  std::string left_suffix = "1";
  std::string right_suffix = "2";
  std::string susp_prefix = "s";
};

/// Path space model ΛV⊗ΛV⊗ΛsV with
///   d(sv) = 1⊗v - v⊗1 - Σ_{i>=1} (sd)^i/i! (v⊗1)
/// and the augmentation ε̄ (map "eps_bar"); "left"/"right" are the two copies
/// of ΛV. The auxiliary derivation s (kept as "s") sends both copies of v
/// to sv and kills sv.
MappingSpaceModel build_path_model(const SullivanModel& m, const PathNames& names = {});

/// Sphere space model ΛV⊗Λs^jV with d(s^j v) = (-1)^j s^(j)(dv) and the
/// augmentation ε ("eps"). Suspensions are named <prefix><v>, default s<j><v>.
MappingSpaceModel build_sphere_model(const SullivanModel& m, int j,
                                     const std::string& prefix = "");

/// Disk space model ΛV⊗Λs^{k-1}V⊗Λs^kV with
///   d(s^k v) = s^{k-1}v + (-1)^k s^(k)(dv),
/// the quasi-iso augmentation ε̃ ("eps_tilde") and the inclusion of the
/// sphere model ("incl_sphere"). Derivations "s_km1", "s_k".
MappingSpaceModel build_disk_model(const SullivanModel& m, int k);

/// Torus model ΛV⊗Λs^{k-1}V⊗ΛsV⊗Λss^{k-1}V: the circle construction applied
/// to the sphere model. Circle suspensions are named s<g>. Derivation "s_loop".
MappingSpaceModel build_torus_model(const SullivanModel& m, int k);

/// Collapse model ΛV⊗Λs^kV⊗ΛsV: amalgamated product of the S^k and circle
/// models over ΛV. Maps: "incl" (from M(S^k)), "comp" (from the torus model),
/// "to_torus_quotient" (iso onto M(T)/(s^{k-1}V)).
/// Note: "comp"'s source is a torus model built internally; use
/// build_sphere_family when object identity across models matters.
MappingSpaceModel build_collapse_model(const SullivanModel& m, int k);

/// All models and maps for one (M, k), sharing algebra objects.
struct SphereFamily {
  SullivanModel base;  // ΛV
  MappingSpaceModel sphere_km1, sphere_k, disk, torus, loop, collapse;
  Quotient torus_quotient;              // T -> T/(s^{k-1}V)
  AlgebraMorphism incl;                 // M(S^k) -> U
  AlgebraMorphism collapse_to_quotient; // U -> T/(s^{k-1}V), iso
  AlgebraMorphism comp;                 // T -> U
};

SphereFamily build_sphere_family(const SullivanModel& m, int k);

/// Internal building block: M ⊗ Λ(s g_i) over all generators of M with
/// d(sg) = (-1)^j s^(j)(dg). `name(g)` names the suspension of g.
MappingSpaceModel suspend_model(const SullivanModel& m, int j,
                                const std::function<std::string(const Generator&)>& name);

std::string susp_name(int level, const std::string& base);

}  // namespace branecalc
