#include "branecalc/mapping_spaces.hpp"

#include <algorithm>

namespace branecalc {

namespace {

constexpr int kSeriesLimit = 64;

void require_chain_map(const AlgebraMorphism& f, const Derivation& d_src,
                       const Derivation& d_tgt, const std::string& what) {
  std::string w;
  if (!f.chain_map(d_src, d_tgt, &w))
    throw verify_error(what + " is not a chain map at generator '" + w + "'");
}

/// Generators of m sorted by (degree, declaration index); the order in which
/// the path-model series can be evaluated.
std::vector<std::size_t> by_degree(const FreeGCA& alg) {
  std::vector<std::size_t> order(alg.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return alg.gen(a).degree < alg.gen(b).degree;
  });
  return order;
}

}  // namespace

const AlgebraMorphism& MappingSpaceModel::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw input_error("no structure map named '" + name + "'");
  return it->second;
}

const Derivation& MappingSpaceModel::derivation(const std::string& name) const {
  auto it = derivations.find(name);
  if (it == derivations.end()) throw input_error("no derivation named '" + name + "'");
  return it->second;
}

std::string susp_name(int level, const std::string& base) {
  return "s" + std::to_string(level) + base;
}

MappingSpaceModel suspend_model(const SullivanModel& m, int j,
                                const std::function<std::string(const Generator&)>& name) {
  const FreeGCA& src = *m.algebra;
  std::vector<Generator> gens;
  for (const Generator& g : src.gens()) {
    if (g.degree - j < 1)
      throw input_error("suspension of '" + g.name + "' would have degree " +
                        std::to_string(g.degree - j) + " < 1");
    gens.push_back(g);
    gens.push_back(Generator{name(g), g.degree - j, j, g.name});
  }
  AlgebraPtr alg = FreeGCA::make(std::move(gens));
  AlgebraMorphism incl = AlgebraMorphism::by_names(m.algebra, alg);

  Derivation s(alg, -j);
  for (const Generator& g : src.gens()) {
    s.set_image(g.name, Element::generator(alg, name(g)));
    s.set_image(name(g), Element::zero(alg));
  }

  Derivation d(alg, 1);
  int sign = j % 2 == 0 ? 1 : -1;
  for (const Generator& g : src.gens()) {
    Element dg = incl.apply(m.d.image(src.index_of(g.name)));
    d.set_image(g.name, dg);
    d.set_image(name(g), s.apply(dg) * Rational(sign));
  }
  SullivanModel model{alg, std::move(d)};
  model.require_d_squared_zero("suspend_model");
  require_chain_map(incl, m.d, model.d, "suspension inclusion");

  std::map<std::string, std::string> to_zero;
  for (const Generator& g : src.gens()) to_zero[name(g)] = "";
  AlgebraMorphism eps = AlgebraMorphism::by_names(alg, m.algebra, to_zero);
  require_chain_map(eps, model.d, m.d, "suspension augmentation");

  MappingSpaceModel out{std::move(model), {}, {}};
  out.maps.emplace("incl", std::move(incl));
  out.maps.emplace("eps", std::move(eps));
  out.derivations.emplace("s", std::move(s));
  return out;
}

MappingSpaceModel build_path_model(const SullivanModel& m, const PathNames& names) {
  const FreeGCA& src = *m.algebra;
  for (const Generator& g : src.gens())
    if (g.degree <= 1)
      throw input_error("path model requires a 1-connected model; generator '" +
                        g.name + "' has degree " + std::to_string(g.degree));
  auto left = [&](const Generator& g) { return g.name + names.left_suffix; };
  auto right = [&](const Generator& g) { return g.name + names.right_suffix; };
  auto susp = [&](const Generator& g) { return names.susp_prefix + g.name; };

  std::vector<Generator> gens;
  for (const Generator& g : src.gens()) {
    gens.push_back(Generator{left(g), g.degree, 0, g.name});
    gens.push_back(Generator{right(g), g.degree, 0, g.name});
    gens.push_back(Generator{susp(g), g.degree - 1, 1, g.name});
  }
  AlgebraPtr alg = FreeGCA::make(std::move(gens));

  std::map<std::string, std::string> to_left, to_right;
  for (const Generator& g : src.gens()) {
    to_left[g.name] = left(g);
    to_right[g.name] = right(g);
  }
  AlgebraMorphism l1 = AlgebraMorphism::by_names(m.algebra, alg, to_left);
  AlgebraMorphism l2 = AlgebraMorphism::by_names(m.algebra, alg, to_right);

  // s sends both copies of v to sv; this two-sided convention makes sd
  // locally nilpotent, so the series below terminates.
  Derivation s(alg, -1);
  for (const Generator& g : src.gens()) {
    Element sv = Element::generator(alg, susp(g));
    s.set_image(left(g), sv);
    s.set_image(right(g), sv);
    s.set_image(susp(g), Element::zero(alg));
  }

  Derivation d(alg, 1);
  for (const Generator& g : src.gens()) {
    std::size_t i = src.index_of(g.name);
    d.set_image(left(g), l1.apply(m.d.image(i)));
    d.set_image(right(g), l2.apply(m.d.image(i)));
  }
  for (std::size_t i : by_degree(src)) {
    const Generator& g = src.gen(i);
    Element v1 = Element::generator(alg, left(g));
    Element v2 = Element::generator(alg, right(g));
    Element series(alg);
    Element term = v1;
    int it = 0;
    while (true) {
      if (++it > kSeriesLimit)
        throw verify_error("path model series for '" + g.name + "' did not terminate");
      term = s.apply(d.apply(term)) * Rational(1, it);  // (sd)^it / it!
      if (term.is_zero()) break;
      series += term;
    }
    d.set_image(susp(g), v2 - v1 - series);
  }
  SullivanModel model{alg, std::move(d)};
  model.require_d_squared_zero("build_path_model");
  require_chain_map(l1, m.d, model.d, "path model left inclusion");
  require_chain_map(l2, m.d, model.d, "path model right inclusion");

  std::map<std::string, std::string> eps_names;
  for (const Generator& g : src.gens()) {
    eps_names[left(g)] = g.name;
    eps_names[right(g)] = g.name;
    eps_names[susp(g)] = "";
  }
  AlgebraMorphism eps_bar = AlgebraMorphism::by_names(alg, m.algebra, eps_names);
  require_chain_map(eps_bar, model.d, m.d, "eps_bar");

  MappingSpaceModel out{std::move(model), {}, {}};
  out.maps.emplace("left", std::move(l1));
  out.maps.emplace("right", std::move(l2));
  out.maps.emplace("eps_bar", std::move(eps_bar));
  out.derivations.emplace("s", std::move(s));
  return out;
}

MappingSpaceModel build_sphere_model(const SullivanModel& m, int j,
                                     const std::string& prefix) {
  if (j < 1) throw input_error("sphere model requires j >= 1");
  std::string pfx = prefix.empty() ? "s" + std::to_string(j) : prefix;
  MappingSpaceModel out =
      suspend_model(m, j, [&](const Generator& g) { return pfx + g.name; });
  return out;
}

MappingSpaceModel build_disk_model(const SullivanModel& m, int k) {
  if (k < 2) throw input_error("disk model requires k >= 2");
  const FreeGCA& src = *m.algebra;
  std::vector<Generator> gens;
  for (const Generator& g : src.gens()) {
    if (g.degree - k < 1)
      throw input_error("disk model requires a k-connected model; '" + g.name +
                        "' has degree " + std::to_string(g.degree));
    gens.push_back(g);
    gens.push_back(Generator{susp_name(k - 1, g.name), g.degree - k + 1, k - 1, g.name});
    gens.push_back(Generator{susp_name(k, g.name), g.degree - k, k, g.name});
  }
  AlgebraPtr alg = FreeGCA::make(std::move(gens));

  Derivation s_km1(alg, -(k - 1)), s_k(alg, -k);
  for (const Generator& g : src.gens()) {
    s_km1.set_image(g.name, Element::generator(alg, susp_name(k - 1, g.name)));
    s_km1.set_image(susp_name(k - 1, g.name), Element::zero(alg));
    s_km1.set_image(susp_name(k, g.name), Element::zero(alg));
    s_k.set_image(g.name, Element::generator(alg, susp_name(k, g.name)));
    s_k.set_image(susp_name(k - 1, g.name), Element::zero(alg));
    s_k.set_image(susp_name(k, g.name), Element::zero(alg));
  }

  AlgebraMorphism incl_base = AlgebraMorphism::by_names(m.algebra, alg);
  Derivation d(alg, 1);
  int sgn_km1 = (k - 1) % 2 == 0 ? 1 : -1;
  int sgn_k = k % 2 == 0 ? 1 : -1;
  for (const Generator& g : src.gens()) {
    Element dg = incl_base.apply(m.d.image(src.index_of(g.name)));
    d.set_image(g.name, dg);
    d.set_image(susp_name(k - 1, g.name), s_km1.apply(dg) * Rational(sgn_km1));
    d.set_image(susp_name(k, g.name),
                Element::generator(alg, susp_name(k - 1, g.name)) +
                    s_k.apply(dg) * Rational(sgn_k));
  }
  SullivanModel model{alg, std::move(d)};
  model.require_d_squared_zero("build_disk_model");

  std::map<std::string, std::string> eps_names;
  for (const Generator& g : src.gens()) {
    eps_names[susp_name(k - 1, g.name)] = "";
    eps_names[susp_name(k, g.name)] = "";
  }
  AlgebraMorphism eps_tilde = AlgebraMorphism::by_names(alg, m.algebra, eps_names);
  require_chain_map(eps_tilde, model.d, m.d, "eps_tilde");

  MappingSpaceModel sphere = build_sphere_model(m, k - 1);
  AlgebraMorphism incl_sphere = AlgebraMorphism::by_names(sphere.model.algebra, alg);
  require_chain_map(incl_sphere, sphere.model.d, model.d, "disk model sphere inclusion");

  MappingSpaceModel out{std::move(model), {}, {}};
  out.maps.emplace("eps_tilde", std::move(eps_tilde));
  out.maps.emplace("incl_sphere", std::move(incl_sphere));
  out.derivations.emplace("s_km1", std::move(s_km1));
  out.derivations.emplace("s_k", std::move(s_k));
  return out;
}

MappingSpaceModel build_torus_model(const SullivanModel& m, int k) {
  if (k < 2) throw input_error("torus model requires k >= 2");
  MappingSpaceModel sphere = build_sphere_model(m, k - 1);
  MappingSpaceModel torus =
      suspend_model(sphere.model, 1, [](const Generator& g) { return "s" + g.name; });
  MappingSpaceModel out{std::move(torus.model), {}, {}};
  out.maps.emplace("incl_sphere", torus.maps.at("incl"));
  out.derivations.emplace("s_loop", torus.derivations.at("s"));
  return out;
}

SphereFamily build_sphere_family(const SullivanModel& m, int k) {
  if (k < 2) throw input_error("sphere family requires k >= 2");
  if (!check_k_connected(m, k))
    throw input_error("model is not k-connected for k = " + std::to_string(k));
  SphereFamily fam;
  fam.base = m;
  fam.sphere_km1 = build_sphere_model(m, k - 1);
  fam.sphere_k = build_sphere_model(m, k);
  fam.disk = build_disk_model(m, k);
  fam.torus = build_torus_model(m, k);
  fam.loop = suspend_model(m, 1, [](const Generator& g) { return "s" + g.name; });

  // Collapse model U = M(S^k) ⊗_ΛV M(S^1)
  std::vector<std::string> shared;
  for (const Generator& g : m.algebra->gens()) shared.push_back(g.name);
  Amalgamation am = tensor_amalgamated(fam.sphere_k.model, fam.loop.model, shared);
  fam.collapse.model = am.model;
  fam.incl = am.left;
  require_chain_map(fam.incl, fam.sphere_k.model.d, fam.collapse.model.d, "incl^*");

  // Quotient of the torus model by s^{k-1}V, and the iso U -> quotient
  std::set<std::string> killed;
  std::map<std::string, std::string> u_to_q, q_to_u;
  for (const Generator& g : m.algebra->gens()) {
    killed.insert(susp_name(k - 1, g.name));
    u_to_q[susp_name(k, g.name)] = "s" + susp_name(k - 1, g.name);
    q_to_u["s" + susp_name(k - 1, g.name)] = susp_name(k, g.name);
  }
  fam.torus_quotient = quotient_by_generators(fam.torus.model, killed);
  fam.collapse_to_quotient = AlgebraMorphism::by_names(
      fam.collapse.model.algebra, fam.torus_quotient.model.algebra, u_to_q);
  require_chain_map(fam.collapse_to_quotient, fam.collapse.model.d,
                    fam.torus_quotient.model.d, "collapse/torus-quotient iso");

  AlgebraMorphism q_iso_u = AlgebraMorphism::by_names(
      fam.torus_quotient.model.algebra, fam.collapse.model.algebra, q_to_u);
  fam.comp = fam.torus_quotient.projection.then(q_iso_u);
  require_chain_map(fam.comp, fam.torus.model.d, fam.collapse.model.d, "comp^*");

  fam.collapse.maps.emplace("incl", fam.incl);
  fam.collapse.maps.emplace("comp", fam.comp);
  fam.collapse.maps.emplace("to_torus_quotient", fam.collapse_to_quotient);
  return fam;
}

MappingSpaceModel build_collapse_model(const SullivanModel& m, int k) {
  return build_sphere_family(m, k).collapse;
}

}  // namespace branecalc
