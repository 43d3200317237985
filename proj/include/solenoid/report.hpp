#pragma once

// Machine-readable verification reports.  Serialization is canonical:
// keys are sorted, checks are ordered by name, and no field depends on
// wall-clock time, so identical runs produce byte-identical documents.

#include <string>
#include <vector>

#include <json.hpp>

namespace solenoid {

struct Check {
  std::string name;
  nlohmann::json inputs;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::string suite;
  nlohmann::json config;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* first_failure() const;
  void append(Check check);

  nlohmann::json to_json() const;
  std::string dump() const;  // to_json() with 2-space indent and a trailing newline
};

}  // namespace solenoid
