#pragma once

#include <nlohmann/json.hpp>

#include "isrlab/expectation.hpp"

namespace isrlab {

using Json = nlohmann::ordered_json;

// Group elements:
//   {"family":"affine","n":3,"g":"100010001","v":"101"}    g row-major
//   {"family":"wreath","n":3,"perm":[2,1,3],"v":"100"}      one-line, 1-based
//   {"family":"lamplighter","m":4,"v":"1000","t":1}         v[i] is the lamp at i
//   {"family":"cantor","m":2,"perm":["01","00","10","11"],"A":["10"]}
Json to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j);

// [[element, "re", "im"], ...]
Json to_json(const AlgebraElement& x);
AlgebraElement algebra_from_json(const nlohmann::json& j);

// {"label", "family", "truncation", "basis", "window"}
Json to_json(const SubalgebraSpec& spec);
SubalgebraSpec spec_from_json(const nlohmann::json& j);

}  // namespace isrlab
