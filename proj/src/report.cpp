#include "solenoid/report.hpp"

#include <algorithm>

namespace solenoid {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::first_failure() const {
  for (const auto& check : checks) {
    if (!check.pass) return &check;
  }
  return nullptr;
}

void Report::append(Check check) { checks.push_back(std::move(check)); }

nlohmann::json Report::to_json() const {
  std::vector<const Check*> ordered;
  ordered.reserve(checks.size());
  for (const auto& check : checks) ordered.push_back(&check);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Check* a, const Check* b) { return a->name < b->name; });

  nlohmann::json out;
  out["suite"] = suite;
  out["config"] = config;
  out["checks"] = nlohmann::json::array();
  for (const Check* check : ordered) {
    nlohmann::json item;
    item["name"] = check->name;
    item["inputs"] = check->inputs;
    item["status"] = check->pass ? "pass" : "fail";
    item["witness"] = check->witness;
    out["checks"].push_back(std::move(item));
  }
  return out;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace solenoid
