#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isrlab/groups.hpp"
#include "isrlab/report.hpp"

namespace isrlab {

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::optional<int> n;  // overrides the default affine / wreath truncation
  std::optional<int> m;  // overrides the default lamplighter modulus / cantor level
};

// labelled elements whose normal closures the closure suite tabulates
std::vector<std::pair<std::string, GroupElement>> closure_probes(Truncation t);

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite(const std::string& name);
// throws UnknownSuite
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace isrlab
