#include "branecalc/report.hpp"

#include <algorithm>

namespace branecalc {

Json element_to_json(const Element& e) {
  Json out;
  out["str"] = e.str();
  Json terms = Json::array();
  if (!e.is_zero()) {
    const AlgebraPtr& alg = e.algebra();
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    for (const auto& t : e.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return alg->mono_less(a->first, b->first); });
    for (auto* t : sorted) {
      Json term;
      term["coeff"] = rational_str(t->second);
      term["monomial"] = alg->mono_str(t->first);
      terms.push_back(std::move(term));
    }
  }
  out["terms"] = std::move(terms);
  return out;
}

Json result_document(const std::string& command, int max_degree) {
  Json doc;
  doc["command"] = command;
  doc["engine_version"] = kEngineVersion;
  doc["max_degree"] = max_degree;
  return doc;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace branecalc
