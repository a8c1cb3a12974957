#pragma once
// JSON encodings of the data the command-line tool exchanges: convex bodies
// (vertex or facet form), coefficient vectors of invariant plane functions,
// and plane bases given as row lists. All parse failures raise Error with
// code InvalidInput and a message naming the offending field.

#include <string>

#include "json.hpp"
#include "pseudovol/convex.hpp"
#include "pseudovol/core.hpp"
#include "pseudovol/klain.hpp"

namespace pseudovol {

using Json = nlohmann::ordered_json;

// {"mode":"vertices","points":[[...],...]} or
// {"mode":"facets","facets":[{"normal":[...],"measure":m},...]},
// optionally with "label". The ambient dimension is the common length of the
// point / normal arrays.
Json body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const Json& j);

// {"p":...,"q":...,"k":...,"coeffs":[...]}
Json klain_vector_to_json(const KlainVector& v);
KlainVector klain_vector_from_json(const Json& j);

// Parses text such as "[[1,0,0,0],[0,0,1,0]]" into a matrix whose columns
// are the listed vectors; every row must have length n.
Matrix plane_from_text(const std::string& text, int n);

// Wrapper around Json::parse that converts parse errors to InvalidInput.
Json parse_json_text(const std::string& text);
Json parse_json_file(const std::string& path);

}  // namespace pseudovol
