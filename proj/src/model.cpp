#include "branecalc/model.hpp"

#include <algorithm>

namespace branecalc {

std::optional<std::string> SullivanModel::d_squared_witness() const {
  for (std::size_t i = 0; i < algebra->size(); ++i)
    if (!d.apply(d.image(i)).is_zero()) return algebra->gen(i).name;
  return std::nullopt;
}

void SullivanModel::require_d_squared_zero(const std::string& context) const {
  if (auto w = d_squared_witness())
    throw verify_error(context + ": d^2 != 0 on generator '" + *w + "'");
}

SullivanModel make_model(std::vector<Generator> gens) {
  AlgebraPtr alg = FreeGCA::make(std::move(gens));
  Derivation d(alg, 1);
  for (std::size_t i = 0; i < alg->size(); ++i) d.set_image(i, Element::zero(alg));
  return SullivanModel{alg, std::move(d)};
}

PurityResult check_pure(const SullivanModel& m) {
  const FreeGCA& alg = *m.algebra;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const Element& img = m.d.image(i);
    if (!alg.odd(i)) {
      if (!img.is_zero()) return {false, alg.gen(i).name};
    } else {
      for (const auto& [mono, c] : img.terms())
        for (std::size_t j = 0; j < alg.size(); ++j)
          if (mono.exp[j] && alg.odd(j)) return {false, alg.gen(i).name};
    }
  }
  return {true, ""};
}

bool check_k_connected(const SullivanModel& m, int k) {
  for (const Generator& g : m.algebra->gens())
    if (g.degree <= k) return false;
  return true;
}

std::vector<std::size_t> even_generators(const SullivanModel& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.algebra->size(); ++i)
    if (!m.algebra->odd(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> odd_generators(const SullivanModel& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.algebra->size(); ++i)
    if (m.algebra->odd(i)) out.push_back(i);
  return out;
}

Amalgamation tensor_amalgamated(const SullivanModel& A, const SullivanModel& B,
                                const std::vector<std::string>& shared_names) {
  std::set<std::string> shared(shared_names.begin(), shared_names.end());
  for (const std::string& name : shared) {
    std::size_t ia = A.algebra->index_of(name);
    std::size_t ib = B.algebra->index_of(name);
    if (A.algebra->gen(ia).degree != B.algebra->gen(ib).degree)
      throw input_error("shared generator '" + name + "' has conflicting degrees");
  }
  std::vector<Generator> gens = A.algebra->gens();
  for (const Generator& g : B.algebra->gens())
    if (!shared.count(g.name)) gens.push_back(g);
  AlgebraPtr alg = FreeGCA::make(std::move(gens));

  AlgebraMorphism left = AlgebraMorphism::by_names(A.algebra, alg);
  AlgebraMorphism right = AlgebraMorphism::by_names(B.algebra, alg);

  Derivation d(alg, 1);
  for (std::size_t i = 0; i < A.algebra->size(); ++i)
    d.set_image(A.algebra->gen(i).name, left.apply(A.d.image(i)));
  for (std::size_t i = 0; i < B.algebra->size(); ++i) {
    const std::string& name = B.algebra->gen(i).name;
    Element img = right.apply(B.d.image(i));
    if (shared.count(name)) {
      if (!(img == d.image(alg->index_of(name))))
        throw input_error("shared generator '" + name +
                          "' has conflicting differentials");
    } else {
      d.set_image(name, std::move(img));
    }
  }
  SullivanModel model{alg, std::move(d)};
  model.require_d_squared_zero("tensor_amalgamated");
  return {std::move(model), std::move(left), std::move(right)};
}

Quotient quotient_by_generators(const SullivanModel& A,
                                const std::set<std::string>& killed) {
  for (const std::string& name : killed) A.algebra->index_of(name);
  std::vector<Generator> gens;
  for (const Generator& g : A.algebra->gens())
    if (!killed.count(g.name)) gens.push_back(g);
  AlgebraPtr alg = FreeGCA::make(std::move(gens));

  std::map<std::string, std::string> overrides;
  for (const std::string& name : killed) overrides[name] = "";
  AlgebraMorphism proj = AlgebraMorphism::by_names(A.algebra, alg, overrides);

  Derivation d(alg, 1);
  for (std::size_t i = 0; i < A.algebra->size(); ++i) {
    const std::string& name = A.algebra->gen(i).name;
    Element img = proj.apply(A.d.image(i));
    if (killed.count(name)) {
      if (!img.is_zero())
        throw input_error("generator set is not closed under the differential: "
                          "d('" + name + "') survives the quotient");
    } else {
      d.set_image(name, std::move(img));
    }
  }
  SullivanModel model{alg, std::move(d)};
  model.require_d_squared_zero("quotient_by_generators");
  std::string w;
  if (!proj.chain_map(A.d, model.d, &w))
    throw verify_error("quotient projection is not a chain map at '" + w + "'");
  return {std::move(model), std::move(proj)};
}

std::pair<SullivanModel, AlgebraMorphism> rename_generators(
    const SullivanModel& A, const std::map<std::string, std::string>& names) {
  std::vector<Generator> gens = A.algebra->gens();
  for (Generator& g : gens) {
    if (auto it = names.find(g.name); it != names.end()) g.name = it->second;
    if (auto it = names.find(g.parent); it != names.end()) g.parent = it->second;
  }
  AlgebraPtr alg = FreeGCA::make(std::move(gens));
  AlgebraMorphism iso(A.algebra, alg, [&] {
    std::vector<Element> images;
    for (std::size_t i = 0; i < A.algebra->size(); ++i)
      images.push_back(Element::generator(alg, i));
    return images;
  }());
  Derivation d(alg, 1);
  for (std::size_t i = 0; i < A.algebra->size(); ++i)
    d.set_image(i, iso.apply(A.d.image(i)));
  return {SullivanModel{alg, std::move(d)}, std::move(iso)};
}

}  // namespace branecalc
