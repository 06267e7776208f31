#pragma once

#include <json.hpp>

#include "branecalc/element.hpp"

namespace branecalc {

/// Insertion-ordered JSON so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// {"str": ..., "terms": [{"coeff": "p/q", "monomial": "x^2 s1x^1"}, ...]}
/// The "str" field round-trips through parse_element.
Json element_to_json(const Element& e);

/// Common document header: command echo, engine version, truncation degree.
Json result_document(const std::string& command, int max_degree);

/// Stable serialization (2-space indent, trailing newline, no timestamps).
std::string dump_json(const Json& j);

}  // namespace branecalc
