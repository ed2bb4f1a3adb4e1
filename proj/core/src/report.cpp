#include "isrlab/report.hpp"

#include <algorithm>

namespace isrlab {

bool ScenarioReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool ScenarioReport::check(std::string description, std::string expected, std::string actual, bool pass) {
  checks.push_back({std::move(description), std::move(expected), std::move(actual), pass});
  return pass;
}

bool SuiteReport::passed() const {
  return std::all_of(scenarios.begin(), scenarios.end(), [](const ScenarioReport& s) { return s.passed(); });
}

nlohmann::ordered_json to_json(const ScenarioReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  nlohmann::ordered_json out = {{"name", r.name},
                                {"paper_anchor", r.paper_anchor},
                                {"parameters", r.parameters},
                                {"checks", checks},
                                {"passed", r.passed()}};
  if (!r.observations.empty()) {
    nlohmann::ordered_json obs = nlohmann::ordered_json::array();
    for (const auto& o : r.observations) obs.push_back({{"item", o.item}, {"value", o.value}});
    out["observations"] = obs;
  }
  return out;
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json scenarios = nlohmann::ordered_json::array();
  for (const auto& s : r.scenarios) scenarios.push_back(to_json(s));
  return {{"suite", r.suite}, {"seed", r.seed}, {"scenarios", scenarios}, {"passed", r.passed()}};
}

}  // namespace isrlab
