#pragma once

// Named verification suites behind the CLI.  Every suite drains its own
// generator seeded from the config, so a config replays byte-identically.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/lattice.hpp"
#include "solenoid/report.hpp"

namespace solenoid {

struct OmegaTuple {
  LatticePoint k, s, p, q, h;
};

struct RunConfig {
  int n = 2;
  std::uint64_t seed = 1;
  int window = 3;       // structural window K
  int eval_window = 2;  // evaluation window K'
  int omega_order = 2;  // r
  std::string suite = "all";
  std::optional<Rational> alpha;
  std::optional<Rational> beta;  // only the integral coset (beta = 0) may be bound
  std::optional<std::string> jetrep_path;
  std::optional<OmegaTuple> omega_tuple;

  void validate() const;  // throws ConfigError
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

Report run_suite(const RunConfig& config);

// Independent oracle for the annihilation order on tensor modules: the
// differentiator coefficient is a finite difference of the polynomial
// i -> (coefficient of E_{k-ih} E_{s+ih} on a basis vector), so the
// order is one more than that polynomial's degree.
int predicted_annihilation_order(const LatticePoint& h, const LatticePoint& k,
                                 const LatticePoint& s, const class ModuleParams& params);

}  // namespace solenoid
