#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace isrlab {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Report-only facts (no pass/fail), e.g. where a finite truncation
// diverges from the infinite statement.
struct Observation {
  std::string item;
  std::string value;
};

struct ScenarioReport {
  std::string name;
  std::string paper_anchor;  // the statement being reproduced
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<Observation> observations;

  bool passed() const;
  // records and returns `pass`
  bool check(std::string description, std::string expected, std::string actual, bool pass);
  bool check_equal(std::string description, const std::string& expected, const std::string& actual) {
    return check(std::move(description), expected, actual, expected == actual);
  }
  bool check_true(std::string description, bool value) {
    return check(std::move(description), "true", value ? "true" : "false", value);
  }
  void observe(std::string item, std::string value) { observations.push_back({std::move(item), std::move(value)}); }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ScenarioReport> scenarios;
  bool passed() const;
};

nlohmann::ordered_json to_json(const ScenarioReport& r);
nlohmann::ordered_json to_json(const SuiteReport& r);

}  // namespace isrlab
