#include "branecalc/brane.hpp"

#include <algorithm>

namespace branecalc {

namespace {

void require_section(const AlgebraMorphism& section, const AlgebraMorphism& proj,
                     const SullivanModel& src, const SullivanModel& tgt,
                     const char* what) {
  for (std::size_t i = 0; i < src.algebra->size(); ++i) {
    Element back = proj.apply(section.image(i));
    if (!(back == Element::generator(src.algebra, i)))
      throw verify_error(std::string(what) + " is not a section at '" +
                         src.algebra->gen(i).name + "'");
  }
  std::string w;
  if (!section.chain_map(src.d, tgt.d, &w))
    throw verify_error(std::string(what) + " is not a chain map at '" + w + "'");
}

AlgebraMorphism build_phi_explicit(const BraneEngine& eng) {
  const SullivanModel& Q = eng.fam.torus_quotient.model;
  const AlgebraPtr& e_alg = eng.E.algebra;
  const SullivanModel& m = eng.base;

  Derivation sigma(e_alg, -eng.k), sder(e_alg, -1);
  for (std::size_t i = 0; i < e_alg->size(); ++i) {
    sigma.set_image(i, Element::zero(e_alg));
    sder.set_image(i, Element::zero(e_alg));
  }
  for (const Generator& g : m.algebra->gens()) {
    sigma.set_image(g.name, Element::generator(e_alg, susp_name(eng.k, g.name)));
    sder.set_image(g.name, Element::generator(e_alg, "s" + g.name));
    sder.set_image(susp_name(eng.k - 1, g.name),
                   Element::generator(e_alg, "s" + susp_name(eng.k - 1, g.name)));
  }

  std::vector<Element> images;
  for (std::size_t i = 0; i < Q.algebra->size(); ++i)
    images.push_back(Element::generator(e_alg, Q.algebra->gen(i).name));
  AlgebraMorphism base_in_E = AlgebraMorphism::by_names(m.algebra, e_alg);
  int sgn = eng.k % 2 == 0 ? 1 : -1;
  for (std::size_t j : odd_generators(m)) {
    const std::string& y = m.algebra->gen(j).name;
    Element corr = sder.apply(sigma.apply(base_in_E.apply(m.d.image(j))));
    std::size_t idx = Q.algebra->index_of("s" + susp_name(eng.k - 1, y));
    images[idx] = images[idx] + corr * Rational(sgn);
  }
  return AlgebraMorphism(Q.algebra, e_alg, std::move(images));
}

AlgebraMorphism build_psi_explicit(const BraneEngine& eng) {
  const SullivanModel& U = eng.fam.collapse.model;
  const AlgebraPtr& z_alg = eng.Z.algebra;
  const std::string& x = eng.base.algebra->gen(0).name;
  std::map<std::string, std::string> names{{x, x + "1"}};
  AlgebraMorphism psi = AlgebraMorphism::by_names(U.algebra, z_alg, names);
  std::vector<Element> images;
  for (std::size_t i = 0; i < U.algebra->size(); ++i) images.push_back(psi.image(i));
  std::size_t idx = U.algebra->index_of("s" + x);
  images[idx] = Element::generator(z_alg, "s" + x) - Element::generator(z_alg, "sL" + x);
  return AlgebraMorphism(U.algebra, z_alg, std::move(images));
}

}  // namespace

BraneEngine build_brane_engine(const SullivanModel& m, int k, int n_max,
                               SectionMode mode, const Rational& gamma_scale,
                               const Rational& eta_scale) {
  if (k < 2 || k % 2 != 0)
    throw input_error("out of scope: brane operations are constructed for even k ≥ 2 only");
  if (gamma_scale == 0 || eta_scale == 0)
    throw input_error("normalization scalars must be nonzero");
  PurityResult purity = check_pure(m);
  if (!purity.pure)
    throw input_error("brane operations require a pure model; generator '" +
                      purity.witness + "' violates purity");
  if (n_max < 0) n_max = default_truncation(m);

  BraneEngine eng;
  eng.base = m;
  eng.k = k;
  eng.n_max = n_max;
  eng.fam = build_sphere_family(m, k);

  // ---- coproduct side ----
  std::vector<std::string> skm1_names;
  for (const Generator& g : m.algebra->gens()) {
    skm1_names.push_back(g.name);
    skm1_names.push_back(susp_name(k - 1, g.name));
  }
  eng.E = tensor_amalgamated(eng.fam.disk.model, eng.fam.torus.model, skm1_names).model;

  std::map<std::string, std::string> et_names;
  for (const Generator& g : m.algebra->gens()) {
    et_names[susp_name(k - 1, g.name)] = "";
    et_names[susp_name(k, g.name)] = "";
  }
  eng.eps_tilde_id = AlgebraMorphism::by_names(
      eng.E.algebra, eng.fam.torus_quotient.model.algebra, et_names);
  std::string w;
  if (!eng.eps_tilde_id.chain_map(eng.E.d, eng.fam.torus_quotient.model.d, &w))
    throw verify_error("ε̃⊗id is not a chain map at '" + w + "'");

  GammaResult gr = build_shriek_constant(m, k, n_max);
  eng.gamma = std::move(gr.gamma);
  eng.gamma.scale = gamma_scale;
  std::vector<bool> e_base(eng.E.algebra->size());
  for (std::size_t i = 0; i < e_base.size(); ++i)
    e_base[i] = eng.E.algebra->gen(i).susp_level != k;
  eng.gamma_id = eng.gamma.hom.map.transport(
      eng.E.algebra, eng.fam.torus.model.algebra, e_base);
  if (!hom_is_cocycle({eng.gamma_id, eng.gamma.degree()}, eng.E.d,
                      eng.fam.torus.model.d, n_max, &w))
    throw verify_error("D(γ⊗id) != 0 on module-basis monomial " + w);

  if (mode == SectionMode::Solver) {
    eng.phi = lift_through_surjection(
        eng.fam.torus_quotient.model,
        AlgebraMorphism::identity(eng.fam.torus_quotient.model.algebra), eng.E,
        eng.eps_tilde_id, n_max);
  } else {
    eng.phi = build_phi_explicit(eng);
  }
  require_section(eng.phi, eng.eps_tilde_id, eng.fam.torus_quotient.model, eng.E,
                  "φ");

  // ---- product side ----
  PathNames pnames{"1", "", "s"};
  MappingSpaceModel P1 = build_path_model(m, pnames);
  std::vector<std::string> bare;
  for (const Generator& g : m.algebra->gens()) bare.push_back(g.name);
  eng.F = tensor_amalgamated(P1.model, eng.fam.sphere_k.model, bare).model;

  PathNames lnames{"1", "", "sL"};
  MappingSpaceModel P2 = build_path_model(m, lnames);
  std::vector<std::string> copies;
  for (const Generator& g : m.algebra->gens()) {
    copies.push_back(g.name + "1");
    copies.push_back(g.name);
  }
  eng.Z = tensor_amalgamated(eng.F, P2.model, copies).model;

  std::map<std::string, std::string> eb_names;
  for (const Generator& g : m.algebra->gens()) {
    eb_names[g.name + "1"] = g.name;
    eb_names["sL" + g.name] = "";
  }
  eng.ebar_id = AlgebraMorphism::by_names(eng.Z.algebra,
                                          eng.fam.collapse.model.algebra, eb_names);
  if (!eng.ebar_id.chain_map(eng.Z.d, eng.fam.collapse.model.d, &w))
    throw verify_error("ε̄⊗id is not a chain map at '" + w + "'");

  EtaResult er = build_shriek_diagonal(m, n_max, lnames);
  eng.eta = std::move(er.eta);
  eng.eta.scale = eta_scale;
  std::vector<bool> z_base(eng.Z.algebra->size(), true);
  for (const Generator& g : m.algebra->gens())
    z_base[eng.Z.algebra->index_of("sL" + g.name)] = false;
  eng.eta_id = eng.eta.hom.map.transport(eng.Z.algebra, eng.F.algebra, z_base);
  if (!hom_is_cocycle({eng.eta_id, eng.eta.degree()}, eng.Z.d, eng.F.d, n_max, &w))
    throw verify_error("D(η⊗id) != 0 on module-basis monomial " + w);

  bool psi_explicit = even_generators(m).size() == 1 && odd_generators(m).empty();
  if (mode == SectionMode::Solver || (mode == SectionMode::Auto && !psi_explicit)) {
    eng.psi = lift_through_surjection(
        eng.fam.collapse.model,
        AlgebraMorphism::identity(eng.fam.collapse.model.algebra), eng.Z,
        eng.ebar_id, n_max);
  } else if (psi_explicit) {
    eng.psi = build_psi_explicit(eng);
  } else {
    throw input_error("explicit ψ is only available for a single even generator");
  }
  require_section(eng.psi, eng.ebar_id, eng.fam.collapse.model, eng.Z, "ψ");

  std::map<std::string, std::string> ebf_names;
  for (const Generator& g : m.algebra->gens()) {
    ebf_names[g.name + "1"] = g.name;
    ebf_names["s" + g.name] = "";
  }
  eng.ebar_F = AlgebraMorphism::by_names(eng.F.algebra,
                                         eng.fam.sphere_k.model.algebra, ebf_names);
  if (!eng.ebar_F.chain_map(eng.F.d, eng.fam.sphere_k.model.d, &w))
    throw verify_error("ε̄ on the product factor is not a chain map at '" + w + "'");
  return eng;
}

BraneOperation brane_coproduct_dual(const BraneEngine& eng) {
  BraneOperation op;
  op.kind = "coproduct_dual";
  op.source = eng.fam.sphere_k.model;
  op.target = eng.fam.torus.model;
  op.degree_shift = eng.gamma.degree();
  AlgebraMorphism incl = eng.fam.incl, iso = eng.fam.collapse_to_quotient,
                  phi = eng.phi;
  ModuleMorphism gamma_id = eng.gamma_id;
  Rational scale = eng.gamma.scale;
  op.action = [incl, iso, phi, gamma_id, scale](const Element& a) {
    return gamma_id.apply(phi.apply(iso.apply(incl.apply(a)))) * scale;
  };
  return op;
}

BraneOperation brane_product_dual(const BraneEngine& eng) {
  BraneOperation op;
  op.kind = "product_dual";
  op.source = eng.fam.torus.model;
  op.target = eng.fam.sphere_k.model;
  op.degree_shift = eng.eta.degree();
  AlgebraMorphism comp = eng.fam.comp, psi = eng.psi, ebar_F = eng.ebar_F;
  ModuleMorphism eta_id = eng.eta_id;
  Rational scale = eng.eta.scale;
  op.action = [comp, psi, eta_id, ebar_F, scale](const Element& a) {
    return ebar_F.apply(eta_id.apply(psi.apply(comp.apply(a)))) * scale;
  };
  return op;
}

BraneOperation brane_coproduct_dual(const SullivanModel& m, int k, int n_max,
                                    SectionMode mode) {
  return brane_coproduct_dual(build_brane_engine(m, k, n_max, mode));
}

BraneOperation brane_product_dual(const SullivanModel& m, int k, int n_max,
                                  SectionMode mode) {
  return brane_product_dual(build_brane_engine(m, k, n_max, mode));
}

CompositeResult compose_operations(const BraneOperation& delta,
                                   const BraneOperation& mu, int n_max) {
  require_same_algebra(mu.target.algebra, delta.source.algebra,
                       "compose_operations");
  CompositeResult out;
  out.op.kind = "composite";
  out.op.source = mu.source;
  out.op.target = delta.target;
  out.op.degree_shift = delta.degree_shift + mu.degree_shift;
  auto dact = delta.action, mact = mu.action;
  out.op.action = [dact, mact](const Element& a) { return dact(mact(a)); };

  const SullivanModel& tgt = out.op.target;
  for (int n = 0; n <= n_max; ++n)
    for (const Monomial& b : monomials_of_degree(*out.op.source.algebra, n)) {
      Element img = out.op.action(Element::term(out.op.source.algebra, b, 1));
      if (img.is_zero()) continue;
      if (!is_cocycle(img, tgt)) continue;
      if (coboundary_preimage(img, tgt)) continue;
      out.report.nontrivial = true;
      out.report.witnesses.emplace_back(b, std::move(img));
    }
  return out;
}

VerifyReport run_verify_suite(const SullivanModel& m, int k, int n_max) {
  if (n_max < 0) n_max = default_truncation(m);
  VerifyReport rep;
  auto check = [&](const std::string& name, auto&& fn) {
    VerifyReport::Check c{name, false, ""};
    try {
      fn();
      c.ok = true;
    } catch (const std::exception& e) {
      c.detail = e.what();
      rep.all_ok = false;
      if (rep.first_failure.empty()) rep.first_failure = name;
    }
    rep.checks.push_back(std::move(c));
  };

  std::optional<BraneEngine> eng;
  check("build_engine", [&] { eng.emplace(build_brane_engine(m, k, n_max)); });
  if (!eng) return rep;

  std::optional<BraneOperation> delta, mu;
  check("coproduct_chain_map", [&] {
    delta.emplace(brane_coproduct_dual(*eng));
    std::string w;
    if (!operation_is_chain_map(*delta, n_max, &w))
      throw verify_error("δ^∨ chain-map failure at " + w);
  });
  check("product_chain_map", [&] {
    mu.emplace(brane_product_dual(*eng));
    std::string w;
    if (!operation_is_chain_map(*mu, n_max, &w))
      throw verify_error("μ^∨ chain-map failure at " + w);
  });
  check("composite_chain_map", [&] {
    if (!delta || !mu) throw verify_error("pipelines unavailable");
    auto comp = compose_operations(*delta, *mu, 0);
    std::string w;
    if (!operation_is_chain_map(comp.op, n_max, &w))
      throw verify_error("composite chain-map failure at " + w);
  });
  check("disk_quasi_iso", [&] {
    if (cohomology_dims(eng->fam.disk.model, n_max) != cohomology_dims(m, n_max))
      throw verify_error("H(M(D^k)) differs from H(ΛV) in degree <= " +
                         std::to_string(n_max));
  });
  check("path_quasi_iso", [&] {
    MappingSpaceModel path = build_path_model(m);
    if (cohomology_dims(path.model, n_max) != cohomology_dims(m, n_max))
      throw verify_error("H(M(I)) differs from H(ΛV) in degree <= " +
                         std::to_string(n_max));
  });
  bool explicit_psi = even_generators(m).size() == 1 && odd_generators(m).empty();
  if (explicit_psi) {
    check("solver_explicit_agreement", [&] {
      if (!delta || !mu) throw verify_error("pipelines unavailable");
      BraneEngine solver = build_brane_engine(m, k, n_max, SectionMode::Solver);
      BraneOperation d2 = brane_coproduct_dual(solver);
      BraneOperation m2 = brane_product_dual(solver);
      int cap = std::min(n_max, 12);
      auto agree = [&](const BraneOperation& a, const BraneOperation& b,
                       const SullivanModel& src_model, const SullivanModel& tgt_model) {
        for (int n = 0; n <= cap; ++n)
          for (const Monomial& mono : monomials_of_degree(*src_model.algebra, n)) {
            Element e = Element::term(src_model.algebra, mono, 1);
            if (!src_model.d.apply(e).is_zero()) continue;
            Element va = a.apply(e);
            // the two engines build distinct algebra objects with the same
            // generator names; compare after renaming across them
            Element eb =
                AlgebraMorphism::by_names(src_model.algebra, b.source.algebra)
                    .apply(e);
            Element vb =
                AlgebraMorphism::by_names(b.target.algebra, tgt_model.algebra)
                    .apply(b.apply(eb));
            Element diff = va - vb;
            if (!is_cocycle(diff, tgt_model) || !coboundary_preimage(diff, tgt_model))
              throw verify_error("pipelines disagree on the class of " +
                                 src_model.algebra->mono_str(mono));
          }
      };
      agree(*delta, d2, eng->fam.sphere_k.model, eng->fam.torus.model);
      agree(*mu, m2, eng->fam.torus.model, eng->fam.sphere_k.model);
    });
  }
  return rep;
}

bool operation_is_chain_map(const BraneOperation& op, int n_max,
                            std::string* witness) {
  int sgn = op.degree_shift % 2 == 0 ? 1 : -1;
  for (int n = 0; n <= n_max; ++n)
    for (const Monomial& b : monomials_of_degree(*op.source.algebra, n)) {
      Element e = Element::term(op.source.algebra, b, 1);
      Element lhs = op.target.d.apply(op.action(e));
      Element rhs = op.action(op.source.d.apply(e)) * Rational(sgn);
      if (!(lhs == rhs)) {
        if (witness) *witness = op.source.algebra->mono_str(b);
        return false;
      }
    }
  return true;
}

}  // namespace branecalc
