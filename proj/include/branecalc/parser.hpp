#pragma once

#include "branecalc/model.hpp"

namespace branecalc {

/// A model description file:
///   # comment
///   model <name>            (optional)
///   generator <name> <degree>
///   d <name> = <expr>
/// Expressions: rationals (p or p/q), generator names, `+`, `-`, `*`, `^`,
/// parentheses, and juxtaposition as multiplication. Generators without a
/// `d` line have zero differential. The parsed model must satisfy d² = 0.
struct ParsedModel {
  std::string name;
  SullivanModel model;
};

ParsedModel parse_model(const std::string& text);

/// Parses an expression (the element serialization format round-trips).
Element parse_element(const std::string& text, const AlgebraPtr& alg);

}  // namespace branecalc
